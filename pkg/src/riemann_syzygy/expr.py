"""A small exact index-contraction expression language.

Expressions are sums of monomials.  A monomial is an optional rational
coefficient followed by ``*``-separated factors; each factor is either a bare
scalar symbol (``R``, ``detB``, ``Sc``) or an indexed symbol with
comma-separated index labels in square brackets (``R[a,b,c,d]``,
``Ap[i,j]``).  An index label occurring twice in a monomial is summed over;
a label occurring once is a free index of the expression.  Examples:

    R[a,b,a,b]                          scalar curvature
    Rc[a,c]*Rc[c,b] - 1/4*Sc*Rc[a,b]    a free-index (a, b) tensor
    -2*Ap[i,j]*B[j,k]*BT[k,i]           a matrix-language trace word

Evaluation is exact: numpy einsum over ``dtype=object`` arrays of ints and
``fractions.Fraction``.  Two evaluation contexts are provided: the tensor
language of a rank-4 curvature tensor and the matrix language of its blocks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .curvature import (
    DELTA4,
    Rank4Tensor,
    _as_rational,
    pseudo_riemann,
    ricci,
    ricci_scalar,
    weyl,
)
from .decomp import DELTA3, FBlocks
from .thooft import EPS4

__all__ = [
    "Monomial",
    "Poly",
    "parse",
    "relabel",
    "evaluate",
    "tensor_context",
    "matrix_context",
    "pseudo_variant",
    "ExprError",
]


class ExprError(ValueError):
    """Raised for malformed expressions or evaluation mismatches."""


_IDENT_RE = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")
_LABEL_RE = re.compile(r"^[a-z][a-z0-9]*$")
_RATIONAL_RE = re.compile(r"^[0-9]+(/[0-9]+)?$")


@dataclass(frozen=True)
class Monomial:
    """A rational coefficient times a product of (symbol, labels) factors."""

    coeff: Fraction
    factors: tuple  # of (name, tuple_of_labels); labels == () for scalars

    def free_labels(self):
        counts = {}
        for _, labels in self.factors:
            for lbl in labels:
                counts[lbl] = counts.get(lbl, 0) + 1
        bad = sorted(l for l, c in counts.items() if c > 2)
        if bad:
            raise ExprError(
                f"index label(s) {', '.join(bad)} appear more than twice"
            )
        return tuple(sorted(l for l, c in counts.items() if c == 1))


@dataclass(frozen=True)
class Poly:
    """A sum of monomials sharing one set of free index labels."""

    monomials: tuple
    free_labels: tuple

    @property
    def is_scalar(self):
        return not self.free_labels


def _parse_factor(token):
    token = token.strip()
    m = re.match(r"^([A-Za-z][A-Za-z0-9]*)\s*(?:\[([^\]]*)\])?$", token)
    if not m:
        raise ExprError(f"malformed factor {token!r}")
    name, idx = m.group(1), m.group(2)
    if idx is None:
        return (name, ())
    labels = tuple(s.strip() for s in idx.split(","))
    for lbl in labels:
        if not _LABEL_RE.match(lbl):
            raise ExprError(f"malformed index label {lbl!r} in {token!r}")
    return (name, labels)


def _parse_term(sign, text):
    tokens = [t.strip() for t in text.split("*")]
    if any(not t for t in tokens):
        raise ExprError(f"empty factor in term {text!r}")
    coeff = Fraction(sign)
    start = 0
    if _RATIONAL_RE.match(tokens[0]):
        coeff *= Fraction(tokens[0])
        start = 1
        if start == len(tokens):
            raise ExprError(f"term {text!r} has a coefficient but no factor")
    factors = tuple(_parse_factor(t) for t in tokens[start:])
    return Monomial(coeff=coeff, factors=factors)


def parse(text) -> Poly:
    """Parse an expression string into a Poly."""
    if not isinstance(text, str) or not text.strip():
        raise ExprError("empty expression")
    # split into signed terms (the grammar has no parentheses)
    pieces = re.split(r"(?=[+-])", text.replace(" ", " "))
    terms = []
    sign = 1
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        if piece[0] == "+":
            sign, piece = 1, piece[1:].strip()
        elif piece[0] == "-":
            sign, piece = -1, piece[1:].strip()
        else:
            sign = 1
        if not piece:
            raise ExprError(f"dangling sign in {text!r}")
        terms.append(_parse_term(sign, piece))
    if not terms:
        raise ExprError("empty expression")
    free = terms[0].free_labels()
    for t in terms[1:]:
        if t.free_labels() != free:
            raise ExprError(
                f"inconsistent free labels: {t.free_labels()} vs {free}"
            )
    return Poly(monomials=tuple(terms), free_labels=free)


def scale(poly, c):
    """Multiply a Poly (or expression string) by an exact rational."""
    if isinstance(poly, str):
        poly = parse(poly)
    c = Fraction(c)
    if c == 0:
        return Poly(monomials=(), free_labels=poly.free_labels)
    return Poly(
        monomials=tuple(
            Monomial(coeff=m.coeff * c, factors=m.factors) for m in poly.monomials
        ),
        free_labels=poly.free_labels,
    )


def combine(*terms):
    """Exact linear combination: combine((c1, e1), (c2, e2), ...) = sum ci*ei."""
    polys = [scale(e, c) for c, e in terms]
    free = polys[0].free_labels
    for p in polys[1:]:
        if p.monomials and p.free_labels != free:
            raise ExprError("cannot combine expressions with different free labels")
    monos = tuple(m for p in polys for m in p.monomials)
    return Poly(monomials=monos, free_labels=free)


def relabel(poly, mapping):
    """Rename index labels; merging two free labels contracts them."""
    if isinstance(poly, str):
        poly = parse(poly)
    monos = tuple(
        Monomial(
            coeff=m.coeff,
            factors=tuple(
                (name, tuple(mapping.get(l, l) for l in labels))
                for name, labels in m.factors
            ),
        )
        for m in poly.monomials
    )
    free = monos[0].free_labels() if monos else ()
    for m in monos[1:]:
        if m.free_labels() != free:
            raise ExprError("relabeling produced inconsistent free labels")
    return Poly(monomials=monos, free_labels=free)


def render(poly):
    """Deterministic string form re-parseable by parse()."""
    if isinstance(poly, str):
        poly = parse(poly)
    parts = []
    for m in poly.monomials:
        c = m.coeff
        factors = "*".join(
            name if not labels else f"{name}[{','.join(labels)}]"
            for name, labels in m.factors
        )
        mag = abs(c)
        body = factors if mag == 1 else f"{mag}*{factors}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Evaluation

_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _eval_monomial(mono: Monomial, context, free):
    coeff = mono.coeff
    arrays = []
    subs = []
    letter_of = {}

    def letter(lbl):
        if lbl not in letter_of:
            if len(letter_of) >= len(_LETTERS):
                raise ExprError("too many distinct index labels")
            letter_of[lbl] = _LETTERS[len(letter_of)]
        return letter_of[lbl]

    for name, labels in mono.factors:
        if name not in context:
            raise ExprError(f"unknown symbol {name!r}")
        val = context[name]
        if not labels:
            if isinstance(val, np.ndarray) and val.ndim > 0:
                raise ExprError(f"symbol {name!r} needs {val.ndim} indices")
            coeff = coeff * Fraction(val if not isinstance(val, np.ndarray) else val[()])
            continue
        if not isinstance(val, np.ndarray) or val.ndim != len(labels):
            rank = val.ndim if isinstance(val, np.ndarray) else 0
            raise ExprError(
                f"symbol {name!r} has rank {rank}, got {len(labels)} indices"
            )
        arrays.append(val)
        subs.append("".join(letter(l) for l in labels))

    out_sub = "".join(letter(l) for l in free)
    if not arrays:
        if free:
            raise ExprError("free indices in a purely scalar monomial")
        return coeff
    spec = ",".join(subs) + "->" + out_sub
    try:
        result = np.einsum(spec, *arrays, optimize="greedy")
    except ValueError as exc:
        raise ExprError(f"contraction failed for {spec!r}: {exc}") from exc
    if not free:
        return _as_rational(coeff * Fraction(result[()] if isinstance(result, np.ndarray) else result))
    out = np.zeros(result.shape, dtype=object)
    for idx in np.ndindex(*result.shape):
        out[idx] = _as_rational(coeff * Fraction(result[idx]))
    return out


def evaluate(poly, context):
    """Evaluate a Poly (or expression string) in the given symbol context.

    Scalars come back as int/Fraction; free-index expressions as object
    arrays indexed by the free labels in sorted order.
    """
    if isinstance(poly, str):
        poly = parse(poly)
    total = None
    for mono in poly.monomials:
        val = _eval_monomial(mono, context, poly.free_labels)
        total = val if total is None else total + val
    if total is None:
        if poly.free_labels:
            raise ExprError("cannot evaluate an empty expression with free indices")
        return 0
    if isinstance(total, np.ndarray):
        for idx in np.ndindex(*total.shape):
            total[idx] = _as_rational(Fraction(total[idx]))
        return total
    return _as_rational(Fraction(total))


def tensor_context(t: Rank4Tensor):
    """Symbols of the rank-4 tensor language.

    R (rank 4), Rc (Ricci, rank 2), Sc (scalar), W (Weyl, rank 4),
    Rt (dual tensor, rank 4), eps (rank 4), delta (rank 2).
    """
    return {
        "R": t,
        "Rc": ricci(t),
        "Sc": ricci_scalar(t),
        "W": weyl(t),
        "Rt": pseudo_riemann(t),
        "eps": EPS4,
        "delta": DELTA4,
    }


def _det3(m):
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def _build_eps3():
    e = np.zeros((3, 3, 3), dtype=object)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        e[i, j, k] = 1
        e[j, i, k] = -1
    return e


EPS3 = _build_eps3()


def matrix_context(fb: FBlocks):
    """Symbols of the block (matrix) language.

    Ap, Am, B, BT (rank 2 over 3-dim indices), eps3 (rank 3), delta3
    (rank 2), R (scalar curvature), detB (determinant of the mixed block).
    """
    return {
        "Ap": fb.Ap,
        "Am": fb.Am,
        "B": fb.B,
        "BT": fb.B.T.copy(),
        "eps3": EPS3,
        "delta3": DELTA3,
        "R": fb.scalar_curvature(),
        "detB": _det3(fb.B),
    }


# ---------------------------------------------------------------------------
# Pseudo (orientation-odd) variant of a matrix-language expression

_PLUS_WEIGHT = {"Ap": 1, "BT": 1}
_MINUS_WEIGHT = {"Am": 1, "B": 1, "detB": 3}


def pseudo_variant(poly):
    """Orientation-odd partner of a matrix-language scalar.

    Replacing the curvature by its dual flips the sign of the Am and B
    blocks while keeping Ap and B^T; on a parity-even monomial this maps the
    monomial to its parity image with sign (-1)^(number of flipped factors).
    Summing the expression and its dual image keeps, per monomial, the sign
    sgn(n_plus - n_minus) where n_plus counts Ap/BT factors and n_minus
    counts Am/B factors (detB counts three B entries); balanced monomials
    cancel and are dropped.
    """
    if isinstance(poly, str):
        poly = parse(poly)
    out = []
    for mono in poly.monomials:
        n_plus = sum(_PLUS_WEIGHT.get(name, 0) for name, _ in mono.factors)
        n_minus = sum(_MINUS_WEIGHT.get(name, 0) for name, _ in mono.factors)
        if n_plus == n_minus:
            continue
        sign = 1 if n_plus > n_minus else -1
        out.append(Monomial(coeff=mono.coeff * sign, factors=mono.factors))
    return Poly(monomials=tuple(out), free_labels=poly.free_labels)

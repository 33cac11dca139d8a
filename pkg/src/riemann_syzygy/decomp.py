"""Irreducible block decomposition of 4D curvature tensors.

Under so(4) = su(2) x su(2) a tensor with the algebraic curvature symmetries
splits into two symmetric 3x3 blocks ``Ap`` (self-dual/self-dual) and ``Am``
(anti/anti) plus one general 3x3 block ``B`` (mixed), with the constraint
``tr Ap == tr Am`` (equivalent to the first Bianchi identity):

    R_abcd = Ap_ij eta^i_ab eta^j_cd + B_ij eta^i_ab etabar^j_cd
             + B_ji etabar^i_ab eta^j_cd + Am_ij etabar^i_ab etabar^j_cd
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .curvature import (
    SCHEMA,
    Rank4Tensor,
    _as_rational,
    rational_from_str,
    rational_to_str,
    validate_riemann,
    zeros,
)
from .thooft import ETA, ETABAR

__all__ = [
    "FBlocks",
    "raw_blocks",
    "decompose",
    "reconstruct",
    "fblocks_to_dict",
    "fblocks_from_dict",
    "fblocks_to_json",
    "fblocks_from_json",
]

DELTA3 = np.array(
    [[1 if i == j else 0 for j in range(3)] for i in range(3)], dtype=object
)


def _as_matrix3(values, name):
    arr = np.asarray(values, dtype=object)
    if arr.shape != (3, 3):
        raise ValueError(f"{name} must be a 3x3 matrix, got shape {arr.shape}")
    out = np.zeros((3, 3), dtype=object)
    for i, j in np.ndindex(3, 3):
        out[i, j] = _as_rational(
            arr[i, j] if isinstance(arr[i, j], (int, Fraction)) else Fraction(arr[i, j])
        )
    return out


def _trace(m):
    return m[0, 0] + m[1, 1] + m[2, 2]


@dataclass(frozen=True)
class FBlocks:
    """The (Ap, B, Am) block triple of a curvature tensor.

    ``Ap`` and ``Am`` must be symmetric with equal trace; ``B`` is arbitrary.
    Entries are exact rationals.
    """

    Ap: np.ndarray
    B: np.ndarray
    Am: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "Ap", _as_matrix3(self.Ap, "Ap"))
        object.__setattr__(self, "B", _as_matrix3(self.B, "B"))
        object.__setattr__(self, "Am", _as_matrix3(self.Am, "Am"))
        for name in ("Ap", "Am"):
            m = getattr(self, name)
            if not np.array_equal(m, m.T):
                raise ValueError(f"{name} must be symmetric")
        if _trace(self.Ap) != _trace(self.Am):
            raise ValueError("tr(Ap) must equal tr(Am)")

    # -- scalar data ------------------------------------------------------

    def scalar_curvature(self):
        """R = 4 (tr Ap + tr Am)."""
        return 4 * (_trace(self.Ap) + _trace(self.Am))

    def is_einstein(self):
        """Einstein tensors are exactly those with vanishing mixed block."""
        return bool(np.all(self.B == 0))

    # -- block-level maps --------------------------------------------------

    def parity(self):
        """Orientation reversal: swaps the two su(2) factors."""
        return FBlocks(Ap=self.Am.copy(), B=self.B.T.copy(), Am=self.Ap.copy())

    def weyl_blocks(self):
        """Traceless parts (Ap~, Am~): the two Weyl half-blocks."""
        tp = Fraction(_trace(self.Ap), 3)
        tm = Fraction(_trace(self.Am), 3)
        ap = self.Ap - tp * DELTA3
        am = self.Am - tm * DELTA3
        for m in (ap, am):
            for i, j in np.ndindex(3, 3):
                m[i, j] = _as_rational(Fraction(m[i, j]))
        return ap, am

    def __eq__(self, other):
        if not isinstance(other, FBlocks):
            return NotImplemented
        return (
            np.array_equal(self.Ap, other.Ap)
            and np.array_equal(self.B, other.B)
            and np.array_equal(self.Am, other.Am)
        )


def raw_blocks(t: Rank4Tensor):
    """Unvalidated block projections f^{ij} = (1/16) T_abcd s^i_ab s'^j_cd.

    Returns (fpp, fpm, fmp, fmm).  For a tensor with the full curvature
    symmetries these are (Ap, B, B^T, Am); for other antisymmetric-pair
    tensors (e.g. the dual tensor) the four blocks are independent.
    """
    sixteenth = Fraction(1, 16)

    def proj(left, right):
        m = np.einsum("abcd,iab,jcd->ij", t, left, right)
        out = np.zeros((3, 3), dtype=object)
        for i, j in np.ndindex(3, 3):
            out[i, j] = _as_rational(sixteenth * Fraction(m[i, j]))
        return out

    return (
        proj(ETA, ETA),
        proj(ETA, ETABAR),
        proj(ETABAR, ETA),
        proj(ETABAR, ETABAR),
    )


def decompose(t: Rank4Tensor, validate=True) -> FBlocks:
    """Split a curvature tensor into its FBlocks.

    With ``validate=True`` the algebraic curvature symmetries are checked
    first and a ValueError naming the first failed check is raised if the
    input is not a curvature tensor.
    """
    if validate:
        report = validate_riemann(t)
        if not report.is_riemann:
            raise ValueError(
                "not a curvature tensor; failed checks: "
                + ", ".join(report.failures())
            )
    fpp, fpm, fmp, fmm = raw_blocks(t)
    if not np.array_equal(fmp, fpm.T):
        raise ValueError("mixed blocks are not transposes of each other")
    return FBlocks(Ap=fpp, B=fpm, Am=fmm)


def reconstruct(fb: FBlocks) -> Rank4Tensor:
    """Rebuild the rank-4 tensor from its blocks (exact inverse of decompose)."""
    t = zeros()
    t += np.einsum("ij,iab,jcd->abcd", fb.Ap, ETA, ETA)
    t += np.einsum("ij,iab,jcd->abcd", fb.B, ETA, ETABAR)
    t += np.einsum("ij,iab,jcd->abcd", fb.B.T, ETABAR, ETA)
    t += np.einsum("ij,iab,jcd->abcd", fb.Am, ETABAR, ETABAR)
    for idx in np.ndindex(4, 4, 4, 4):
        t[idx] = _as_rational(Fraction(t[idx]))
    return t


# ---------------------------------------------------------------------------
# JSON serialization


def _matrix_to_lists(m):
    return [[rational_to_str(m[i, j]) for j in range(3)] for i in range(3)]


def _matrix_from_lists(rows, name):
    arr = np.asarray(rows, dtype=object)
    if arr.shape != (3, 3):
        raise ValueError(f"{name} must be a 3x3 nested list")
    out = np.zeros((3, 3), dtype=object)
    for i, j in np.ndindex(3, 3):
        out[i, j] = rational_from_str(arr[i, j])
    return out


def fblocks_to_dict(fb: FBlocks):
    return {
        "schema": SCHEMA,
        "Ap": _matrix_to_lists(fb.Ap),
        "B": _matrix_to_lists(fb.B),
        "Am": _matrix_to_lists(fb.Am),
    }


def fblocks_from_dict(data) -> FBlocks:
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    missing = [k for k in ("Ap", "B", "Am") if k not in data]
    if missing:
        raise ValueError(f"missing blocks: {', '.join(missing)}")
    return FBlocks(
        Ap=_matrix_from_lists(data["Ap"], "Ap"),
        B=_matrix_from_lists(data["B"], "B"),
        Am=_matrix_from_lists(data["Am"], "Am"),
    )


def fblocks_to_json(fb: FBlocks):
    return json.dumps(fblocks_to_dict(fb), sort_keys=True, indent=2) + "\n"


def fblocks_from_json(text) -> FBlocks:
    return fblocks_from_dict(json.loads(text))

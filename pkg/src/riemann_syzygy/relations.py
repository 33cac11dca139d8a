"""Registry and exact verification of curvature-invariant identities.

Every relation is stored declaratively in ``data/relations.json`` as one or
two index-contraction expressions (see :mod:`.expr`) together with a domain
("general" curvature tensors or "einstein", i.e. vanishing mixed block) and
an expectation ("zero" for identities, "nonzero" for recorded non-identities
kept as negative controls).  Verification evaluates the residual lhs - rhs
exactly, component by component, on seeded random samples.

Relations whose two sides live in different languages (one contracted from
the rank-4 tensor, the other from the 3x3 blocks) double as consistency
checks between the two evaluation routes.  A relation with ``rhs_delta``
equates a tensor expression with two free indices to a scalar multiple of
the identity matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources

import numpy as np

from . import expr
from .catalog import contexts_for
from .curvature import DELTA4
from .gen import GenConfig, random_fblocks_stream

__all__ = [
    "Relation",
    "RelationResult",
    "VerifyReport",
    "load_relations",
    "relation_names",
    "get_relation",
    "residual",
    "check_relation",
    "verify_all",
    "mutations",
]

_DATA_PACKAGE = "riemann_syzygy.data"
_DATA_FILE = "relations.json"


@dataclass(frozen=True)
class Relation:
    """One cataloged identity (or recorded non-identity)."""

    name: str
    domain: str  # "general" or "einstein"
    lhs_language: str  # "tensor" or "matrix"
    lhs: str
    rhs_language: str | None = None
    rhs: str | None = None
    rhs_delta: bool = False
    expect: str = "zero"  # "zero" or "nonzero"
    tags: tuple = ()
    notes: str = ""

    def __post_init__(self):
        if self.domain not in ("general", "einstein"):
            raise ValueError(f"{self.name}: bad domain {self.domain!r}")
        if self.expect not in ("zero", "nonzero"):
            raise ValueError(f"{self.name}: bad expect {self.expect!r}")
        if self.rhs_delta and self.rhs is None:
            raise ValueError(f"{self.name}: rhs_delta requires an rhs")

    def lhs_poly(self):
        return expr.parse(self.lhs)

    def rhs_poly(self):
        return expr.parse(self.rhs) if self.rhs is not None else None


@dataclass
class RelationResult:
    name: str
    ok: bool
    expect: str
    domain: str
    n_samples: int
    first_failure: int | None  # 0-based sample index, None if ok

    def to_dict(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "expect": self.expect,
            "domain": self.domain,
            "n_samples": self.n_samples,
            "first_failure": self.first_failure,
        }


@dataclass
class VerifyReport:
    seed: int
    n_samples: int
    results: list

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def failures(self):
        return [r.name for r in self.results if not r.ok]

    def to_dict(self):
        return {
            "schema": "riemann-syzygy/1",
            "seed": self.seed,
            "n_samples": self.n_samples,
            "ok": self.ok,
            "results": [r.to_dict() for r in self.results],
        }


def _relation_from_dict(d):
    rhs = d.get("rhs")
    return Relation(
        name=d["name"],
        domain=d.get("domain", "general"),
        lhs_language=d["lhs"]["language"],
        lhs=d["lhs"]["expr"],
        rhs_language=rhs["language"] if rhs else None,
        rhs=rhs["expr"] if rhs else None,
        rhs_delta=bool(d.get("rhs_delta", False)),
        expect=d.get("expect", "zero"),
        tags=tuple(d.get("tags", ())),
        notes=d.get("notes", ""),
    )


_CACHE = None


def load_relations():
    """All cataloged relations, in file order."""
    global _CACHE
    if _CACHE is None:
        text = resources.files(_DATA_PACKAGE).joinpath(_DATA_FILE).read_text()
        data = json.loads(text)
        _CACHE = tuple(_relation_from_dict(d) for d in data["relations"])
        names = [r.name for r in _CACHE]
        if len(set(names)) != len(names):
            raise ValueError("duplicate relation names in the registry")
    return _CACHE


def relation_names():
    return [r.name for r in load_relations()]


def get_relation(name):
    for r in load_relations():
        if r.name == name:
            return r
    raise KeyError(f"unknown relation {name!r}")


def _is_zero(value):
    if isinstance(value, np.ndarray):
        return bool(np.all(value == 0))
    return value == 0


def residual(rel: Relation, fb, tensor=None):
    """Exact lhs - rhs on one sample (scalar or object ndarray)."""
    ctx = contexts_for(fb, tensor=tensor)
    lv = expr.evaluate(rel.lhs_poly(), ctx[rel.lhs_language])
    if rel.rhs is None:
        return lv
    rv = expr.evaluate(rel.rhs_poly(), ctx[rel.rhs_language])
    if rel.rhs_delta:
        rv = np.array([[Fraction(rv) * e for e in row] for row in DELTA4],
                      dtype=object)
    return lv - rv


def check_relation(rel: Relation, samples):
    """Verify one relation on a list of FBlocks samples."""
    first_failure = None
    saw_nonzero = False
    for i, fb in enumerate(samples):
        zero = _is_zero(residual(rel, fb))
        if rel.expect == "zero" and not zero:
            first_failure = i
            break
        if not zero:
            saw_nonzero = True
    if rel.expect == "nonzero":
        ok = saw_nonzero
    else:
        ok = first_failure is None
    return RelationResult(
        name=rel.name,
        ok=ok,
        expect=rel.expect,
        domain=rel.domain,
        n_samples=len(samples),
        first_failure=first_failure,
    )


def verify_all(seed, n_samples=50, relations=None, bound=9):
    """Verify relations on seeded samples, honoring each relation's domain.

    General-domain relations run on unconstrained samples; einstein-domain
    relations run on samples with vanishing mixed block.  Both streams derive
    deterministically from the one seed.
    """
    if relations is None:
        relations = load_relations()
    streams = {}

    def samples_for(domain):
        if domain not in streams:
            cfg = GenConfig(bound=bound, einstein=(domain == "einstein"))
            streams[domain] = random_fblocks_stream(seed, n_samples, cfg)
        return streams[domain]

    results = [check_relation(r, samples_for(r.domain)) for r in relations]
    return VerifyReport(seed=seed, n_samples=n_samples, results=results)


# ---------------------------------------------------------------------------
# Mutation hooks: used to confirm the verifier actually detects corrupted
# coefficients rather than passing vacuously.


def _mutate_expr(text, index):
    poly = expr.parse(text)
    monos = list(poly.monomials)
    m = monos[index]
    monos[index] = replace(m, coeff=m.coeff + 1)
    return expr.render(expr.Poly(monomials=tuple(monos),
                                 free_labels=poly.free_labels))


def mutations(rel: Relation):
    """Yield (description, relation) pairs, each with one coefficient of the
    original relation shifted by +1."""
    n_lhs = len(rel.lhs_poly().monomials)
    for i in range(n_lhs):
        yield (
            f"{rel.name}: lhs monomial {i} coefficient +1",
            replace(rel, lhs=_mutate_expr(rel.lhs, i)),
        )
    if rel.rhs is not None:
        for i in range(len(rel.rhs_poly().monomials)):
            yield (
                f"{rel.name}: rhs monomial {i} coefficient +1",
                replace(rel, rhs=_mutate_expr(rel.rhs, i)),
            )

"""Exact-rational rank analysis of invariant catalogs on random samples.

A catalog of n invariants is probed by evaluating every entry on randomly
generated curvature blocks, stacking the values into a rows-by-n rational
matrix, and running exact Gaussian elimination.  The rank of that matrix
lower-bounds (and, with enough samples, equals with overwhelming probability)
the dimension of the span of the invariants as polynomial functions; its
nullspace vectors are candidate linear identities, which are confirmed on an
independently seeded batch of samples before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import expr
from .catalog import CatalogEntry, contexts_for
from .gen import GenConfig, random_fblocks_stream

__all__ = [
    "RankReport",
    "rref",
    "rank",
    "nullspace",
    "sample_matrix",
    "rank_report",
    "discover_syzygies",
    "express_over",
    "CONFIRM_SEED_XOR",
]

# xor-mask used to derive an independent confirmation seed from a user seed
CONFIRM_SEED_XOR = 0x9E3779B9


def _to_fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form over the rationals.

    Returns (rref_rows, pivot_columns); the input is not modified.
    """
    m = _to_fraction_matrix(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def _primitive(vec):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    from math import gcd, lcm

    denoms = [v.denominator for v in vec if v != 0]
    if not denoms:
        return [0] * len(vec)
    mult = 1
    for d in denoms:
        mult = lcm(mult, d)
    ints = [int(v * mult) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints


def nullspace(rows, ncols=None):
    """Primitive integer basis of the right nullspace of the row span."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[fc]
        basis.append(_primitive(vec))
    return basis


@dataclass
class RankReport:
    """Exact rank analysis of a catalog over random samples."""

    catalog: str
    labels: list
    n_samples: int
    n_rows: int
    rank: int
    pivots: list  # labels of pivot columns
    nullspace: list  # primitive integer vectors over the labels
    stable: bool  # same rank already at half the samples
    seed: int
    config: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "schema": "riemann-syzygy/1",
            "catalog": self.catalog,
            "labels": list(self.labels),
            "n_samples": self.n_samples,
            "n_rows": self.n_rows,
            "rank": self.rank,
            "pivots": list(self.pivots),
            "nullspace": [list(map(int, v)) for v in self.nullspace],
            "stable": self.stable,
            "seed": self.seed,
            "config": dict(self.config),
        }


def _entry_polys(entries, representation=None):
    polys = []
    for e in entries:
        reps = e.representations()
        kind = representation if representation in reps else next(iter(reps))
        p = reps[kind]
        polys.append((kind, expr.parse(p) if isinstance(p, str) else p))
    return polys


def sample_matrix(entries, fbs, representation=None):
    """Rows of exact values: one row per sample for scalar entries, or one
    row per sample and free-index assignment for tensor-valued entries."""
    polys = _entry_polys(entries, representation)
    nfree = {p.free_labels for _, p in polys}
    if len(nfree) != 1:
        raise ValueError("all catalog entries must share the same free labels")
    free = nfree.pop()
    rows = []
    for fb in fbs:
        ctx = contexts_for(fb)
        vals = [expr.evaluate(p, ctx[kind]) for kind, p in polys]
        if not free:
            rows.append([Fraction(v) for v in vals])
        else:
            shape = vals[0].shape
            for idx in np.ndindex(*shape):
                rows.append([Fraction(v[idx]) for v in vals])
    return rows


def rank_report(
    entries,
    seed,
    n_samples=None,
    config=GenConfig(),
    representation=None,
    catalog_name="",
):
    """Sample, rank, and extract confirmed nullspace vectors.

    Rank stability is reported by comparing against the rank reached with the
    first half of the samples; nullspace vectors are confirmed on a fresh
    independently seeded batch before inclusion.
    """
    labels = [e.label for e in entries]
    if n_samples is None:
        n_samples = 2 * len(entries) + 8
    fbs = random_fblocks_stream(seed, n_samples, config)
    rows = sample_matrix(entries, fbs, representation)
    reduced, pivots = rref(rows)
    half_rows = sample_matrix(entries, fbs[: max(1, n_samples // 2)], representation)
    stable = rank(half_rows) == len(pivots)
    null = nullspace(rows, ncols=len(entries))
    confirmed = []
    if null:
        confirm_fbs = random_fblocks_stream(
            seed ^ CONFIRM_SEED_XOR, max(8, len(entries) // 2), config
        )
        confirm_rows = sample_matrix(entries, confirm_fbs, representation)
        for vec in null:
            if all(
                sum(Fraction(c) * row[i] for i, c in enumerate(vec)) == 0
                for row in confirm_rows
            ):
                confirmed.append(vec)
    return RankReport(
        catalog=catalog_name,
        labels=labels,
        n_samples=n_samples,
        n_rows=len(rows),
        rank=len(pivots),
        pivots=[labels[c] for c in pivots],
        nullspace=confirmed,
        stable=stable,
        seed=seed,
        config={"bound": config.bound, "einstein": config.einstein},
    )


def discover_syzygies(entries, seed, n_samples=None, config=GenConfig(),
                      representation=None, catalog_name=""):
    """Alias of rank_report focused on the confirmed nullspace vectors."""
    return rank_report(
        entries, seed, n_samples, config, representation, catalog_name
    )


def express_over(target, entries, seed, n_samples=None, config=GenConfig(),
                 representation=None):
    """Exact coordinates of a scalar expression over a catalog, or None.

    Solves target = sum_i c_i * entry_i on random samples and confirms the
    solution on a fresh independently seeded batch; returns the Fraction
    coefficient list, or None if the target is not in the span.
    """
    if isinstance(target, str):
        target = expr.parse(target)
    if n_samples is None:
        n_samples = 2 * len(entries) + 8
    fbs = random_fblocks_stream(seed, n_samples, config)
    rows = sample_matrix(entries, fbs, representation)
    polys = _entry_polys(entries, representation)
    free = polys[0][1].free_labels
    if target.free_labels != free:
        raise ValueError("target free labels differ from the catalog's")

    def target_col(samples):
        col = []
        for fb in samples:
            ctx = contexts_for(fb)
            # the two languages share no symbol of equal rank, so trying the
            # matrix context first and falling back to tensor is unambiguous
            try:
                v = expr.evaluate(target, ctx["matrix"])
            except expr.ExprError:
                v = expr.evaluate(target, ctx["tensor"])
            if free:
                for idx in np.ndindex(*v.shape):
                    col.append(Fraction(v[idx]))
            else:
                col.append(Fraction(v))
        return col

    b = target_col(fbs)
    aug = [row + [bv] for row, bv in zip(rows, b)]
    reduced, pivots = rref(aug)
    n = len(entries)
    if n in pivots:
        return None  # inconsistent: target outside the span on these samples
    coeffs = [Fraction(0)] * n
    for row, pc in zip(reduced, pivots):
        # the solution with all free variables set to zero
        coeffs[pc] = row[n]
    confirm_fbs = random_fblocks_stream(seed ^ CONFIRM_SEED_XOR, 8, config)
    confirm_rows = sample_matrix(entries, confirm_fbs, representation)
    confirm_b = target_col(confirm_fbs)
    for row, bv in zip(confirm_rows, confirm_b):
        if sum(c * x for c, x in zip(coeffs, row)) != bv:
            return None
    return coeffs

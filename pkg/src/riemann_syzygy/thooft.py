"""Self-dual and anti-self-dual mixing symbols on four Euclidean indices.

The two families of constant antisymmetric symbols ``eta[i]`` (self-dual) and
``etabar[i]`` (anti-self-dual), i = 1..3, intertwine the two su(2) factors of
so(4) with antisymmetric index pairs.  All arithmetic is exact integer.

Public API uses 1-based indices (i in 1..3, a,b,c,d in 1..4) to match the
conventional notation; the arrays themselves are 0-based.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ETA",
    "ETABAR",
    "EPS4",
    "eta",
    "etabar",
    "levi_civita",
    "IdentityReport",
    "verify_appendix_a",
]


def _perm_sign(p):
    """Signature of a permutation given as a tuple of distinct ints."""
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def _build_eps4():
    e = np.zeros((4, 4, 4, 4), dtype=object)
    for p in itertools.permutations(range(4)):
        e[p] = _perm_sign(p)
    return e


EPS4 = _build_eps4()


def _build_eta(sign):
    """eta^i_ab = eps^{i4ab} + sign*(delta^{ia} delta^{4b} - delta^{ib} delta^{4a}).

    sign=+1 gives the self-dual family, sign=-1 the anti-self-dual one.
    (0-based: i in 0..2 maps to index value i, the distinguished index is 3.)
    """
    t = np.zeros((3, 4, 4), dtype=object)
    for i in range(3):
        for a in range(4):
            for b in range(4):
                val = EPS4[i, 3, a, b]
                if a == i and b == 3:
                    val += sign
                if b == i and a == 3:
                    val -= sign
                t[i, a, b] = val
    return t


ETA = _build_eta(+1)
ETABAR = _build_eta(-1)


def _check_range(name, value, lo, hi):
    if not isinstance(value, int) or not (lo <= value <= hi):
        raise ValueError(f"{name} must be an integer in {lo}..{hi}, got {value!r}")


def eta(i, a, b):
    """Self-dual symbol eta^i_ab with 1-based indices."""
    _check_range("i", i, 1, 3)
    _check_range("a", a, 1, 4)
    _check_range("b", b, 1, 4)
    return int(ETA[i - 1, a - 1, b - 1])


def etabar(i, a, b):
    """Anti-self-dual symbol etabar^i_ab with 1-based indices."""
    _check_range("i", i, 1, 3)
    _check_range("a", a, 1, 4)
    _check_range("b", b, 1, 4)
    return int(ETABAR[i - 1, a - 1, b - 1])


def levi_civita(a, b, c, d):
    """Totally antisymmetric symbol with levi_civita(1,2,3,4) = 1."""
    for name, v in zip("abcd", (a, b, c, d)):
        _check_range(name, v, 1, 4)
    return int(EPS4[a - 1, b - 1, c - 1, d - 1])


def _eps3(i, j, k):
    if len({i, j, k}) < 3:
        return 0
    return _perm_sign((i, j, k))


@dataclass
class IdentityReport:
    """Pass/fail per identity family with the first counterexample if any."""

    results: list = field(default_factory=list)  # (name, ok, counterexample)

    def add(self, name, ok, counterexample=None):
        self.results.append((name, bool(ok), counterexample))

    @property
    def all_ok(self):
        return all(ok for _, ok, _ in self.results)

    def to_dict(self):
        return {
            "schema": "riemann-syzygy/1",
            "all_ok": self.all_ok,
            "identities": [
                {"name": name, "ok": ok, "counterexample": ce}
                for name, ok, ce in self.results
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _first_failure(predicate, index_ranges):
    """Return the first index tuple violating the predicate, or None."""
    for idx in itertools.product(*index_ranges):
        if not predicate(*idx):
            return idx
    return None


def verify_appendix_a():
    """Exhaustively check every defining identity of the symbol tables.

    Covers: self/anti-self-duality, the i-summed product formula, the
    epsilon contraction identity, mutual orthogonality, the c-contracted
    product, the exchange symmetry, the eps^{ijk} expansion, and the su(2)
    commutators of tau = eta/2.
    """
    report = IdentityReport()
    r3 = range(3)
    r4 = range(4)
    tables = ((ETA, 1), (ETABAR, -1))

    # (anti-)self-duality: eta^i_ab = +- 1/2 eps_abcd eta^i_cd
    def duality(i, a, b):
        for t, s in tables:
            lhs = 2 * t[i, a, b]
            rhs = s * sum(EPS4[a, b, c, d] * t[i, c, d] for c in r4 for d in r4)
            if lhs != rhs:
                return False
        return True

    ce = _first_failure(duality, (r3, r4, r4))
    report.add("self_duality", ce is None, ce)

    # sum_i eta^i_ab eta^i_cd = delta_ac delta_bd - delta_ad delta_bc +- eps_abcd
    def product_i(a, b, c, d):
        for t, s in tables:
            lhs = sum(t[i, a, b] * t[i, c, d] for i in r3)
            rhs = (
                (a == c) * (b == d)
                - (a == d) * (b == c)
                + s * EPS4[a, b, c, d]
            )
            if lhs != rhs:
                return False
        return True

    ce = _first_failure(product_i, (r4, r4, r4, r4))
    report.add("product_sum_i", ce is None, ce)

    # eps_abcd eta^i_de = -+ (delta_ec eta^i_ab + delta_ea eta^i_bc - delta_eb eta^i_ac)
    def eps_contract(i, a, b, c, e):
        for t, s in tables:
            lhs = sum(EPS4[a, b, c, d] * t[i, d, e] for d in r4)
            rhs = -s * (
                (e == c) * t[i, a, b] + (e == a) * t[i, b, c] - (e == b) * t[i, a, c]
            )
            if lhs != rhs:
                return False
        return True

    ce = _first_failure(eps_contract, (r3, r4, r4, r4, r4))
    report.add("eps_contraction", ce is None, ce)

    # eta^i_ab etabar^j_ab = 0
    def orthogonality(i, j):
        return sum(ETA[i, a, b] * ETABAR[j, a, b] for a in r4 for b in r4) == 0

    ce = _first_failure(orthogonality, (r3, r3))
    report.add("orthogonality", ce is None, ce)

    # eta^i_ac eta^j_bc = delta^ij delta_ab + eps^ijk eta^k_ab
    def product_c(i, j, a, b):
        for t, _ in tables:
            lhs = sum(t[i, a, c] * t[j, b, c] for c in r4)
            rhs = (i == j) * (a == b) + sum(
                _eps3(i, j, k) * t[k, a, b] for k in r3
            )
            if lhs != rhs:
                return False
        return True

    ce = _first_failure(product_c, (r3, r3, r4, r4))
    report.add("product_sum_c", ce is None, ce)

    # eta^i_ac etabar^j_bc = eta^i_bc etabar^j_ac
    def exchange(i, j, a, b):
        lhs = sum(ETA[i, a, c] * ETABAR[j, b, c] for c in r4)
        rhs = sum(ETA[i, b, c] * ETABAR[j, a, c] for c in r4)
        return lhs == rhs

    ce = _first_failure(exchange, (r3, r3, r4, r4))
    report.add("exchange_symmetry", ce is None, ce)

    # eps^ijk eta^j_ab eta^k_cd = delta_ac eta^i_bd - delta_ad eta^i_bc
    #                             - delta_bc eta^i_ad + delta_bd eta^i_ac
    def eps_ijk(i, a, b, c, d):
        for t, _ in tables:
            lhs = sum(
                _eps3(i, j, k) * t[j, a, b] * t[k, c, d] for j in r3 for k in r3
            )
            rhs = (
                (a == c) * t[i, b, d]
                - (a == d) * t[i, b, c]
                - (b == c) * t[i, a, d]
                + (b == d) * t[i, a, c]
            )
            if lhs != rhs:
                return False
        return True

    ce = _first_failure(eps_ijk, (r3, r4, r4, r4, r4))
    report.add("eps_ijk_expansion", ce is None, ce)

    # su(2) commutators of tau = eta/2: [tau^i+-, tau^j+-] = -eps^ijk tau^k+-,
    # and the two families commute.  Checked with 4*eta to stay integer.
    def commutators(i, j, a, b):
        for t, _ in tables:
            comm = sum(
                t[i, a, c] * t[j, c, b] - t[j, a, c] * t[i, c, b] for c in r4
            )
            rhs = -2 * sum(_eps3(i, j, k) * t[k, a, b] for k in r3)
            if comm != rhs:
                return False
        cross = sum(
            ETA[i, a, c] * ETABAR[j, c, b] - ETABAR[j, a, c] * ETA[i, c, b]
            for c in r4
        )
        return cross == 0

    ce = _first_failure(commutators, (r3, r3, r4, r4))
    report.add("su2_commutators", ce is None, ce)

    return report

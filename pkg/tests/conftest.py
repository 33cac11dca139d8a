"""Shared test fixtures and helpers."""

import random
import sys

import numpy as np
import pytest

from riemann_syzygy.decomp import FBlocks
from riemann_syzygy.gen import GenConfig, random_fblocks_stream


@pytest.fixture(scope="session")
def samples():
    """Ten general random block samples (bound 9)."""
    return random_fblocks_stream(20240901, 10, GenConfig())


@pytest.fixture(scope="session")
def einstein_samples():
    """Ten Einstein random block samples (vanishing mixed block)."""
    return random_fblocks_stream(20240901, 10, GenConfig(einstein=True))


def parity_sign(entry):
    """Expected behavior of a scalar entry under orientation reversal.

    Entries whose contraction form carries an odd number of alternating
    symbols flip sign; everything else (including entries with no
    index-contraction form, which are built from even block words) is
    invariant.
    """
    from riemann_syzygy import expr

    reps = entry.representations()
    if "tensor" not in reps:
        return 1
    p = reps["tensor"]
    poly = expr.parse(p) if isinstance(p, str) else p
    signs = {
        -1 if sum(1 for name, _ in m.factors if name == "eps") % 2 else 1
        for m in poly.monomials
    }
    assert len(signs) == 1, entry.label
    return signs.pop()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criterion verdicts after the run."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "CRITERION_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


def relaxed_blocks(seed, bound=9):
    """Blocks with independent traces of Ap and Am.

    The reconstructed tensor keeps the pair-antisymmetry and pair-exchange
    symmetries but violates the first Bianchi identity, so identities that
    depend on it become falsifiable there.  Returns raw (ap, b, am), not an
    FBlocks (which would reject the unequal traces).
    """
    rng = random.Random(seed)

    def sym():
        m = np.zeros((3, 3), dtype=object)
        for i in range(3):
            for j in range(i, 3):
                m[i, j] = m[j, i] = rng.randint(-bound, bound)
        return m

    ap, am = sym(), sym()
    b = np.array(
        [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)],
        dtype=object,
    )
    return ap, b, am


def relaxed_tensor(seed, bound=9):
    """Rank-4 tensor from relaxed_blocks (no first Bianchi identity)."""
    from riemann_syzygy.curvature import zeros
    from riemann_syzygy.thooft import ETA, ETABAR

    ap, b, am = relaxed_blocks(seed, bound)
    t = zeros()
    t += np.einsum("ij,iab,jcd->abcd", ap, ETA, ETA)
    t += np.einsum("ij,iab,jcd->abcd", b, ETA, ETABAR)
    t += np.einsum("ij,iab,jcd->abcd", b.T, ETABAR, ETA)
    t += np.einsum("ij,iab,jcd->abcd", am, ETABAR, ETABAR)
    return t

"""Block decomposition: round trips, parity, raw projections, serialization."""

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riemann_syzygy.curvature import constant_curvature, ricci_scalar
from riemann_syzygy.decomp import (
    FBlocks,
    decompose,
    fblocks_from_json,
    fblocks_to_json,
    raw_blocks,
    reconstruct,
)
from riemann_syzygy.gen import GenConfig, random_fblocks

from conftest import relaxed_tensor


def test_round_trip_blocks_to_blocks(samples):
    for fb in samples:
        assert decompose(reconstruct(fb)) == fb


def test_round_trip_tensor_to_tensor(samples):
    for fb in samples:
        t = reconstruct(fb)
        assert np.array_equal(reconstruct(decompose(t)), t)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip_property(seed):
    fb = random_fblocks(seed, GenConfig(bound=9))
    assert decompose(reconstruct(fb)) == fb


def test_scalar_curvature_matches_tensor(samples):
    for fb in samples[:3]:
        assert fb.scalar_curvature() == ricci_scalar(reconstruct(fb))


def test_constant_curvature_blocks():
    fb = decompose(constant_curvature(24))
    # pure scalar curvature: Ap = Am = (R/24) * identity, B = 0
    assert np.all(fb.B == 0)
    assert fb.is_einstein()
    assert np.array_equal(fb.Ap, fb.Am)
    assert fb.Ap[0, 0] == 1 and fb.Ap[0, 1] == 0


def test_parity_swaps_blocks(samples):
    fb = samples[0]
    p = fb.parity()
    assert np.array_equal(p.Ap, fb.Am)
    assert np.array_equal(p.Am, fb.Ap)
    assert np.array_equal(p.B, fb.B.T)
    assert p.parity() == fb


def test_weyl_blocks_are_traceless(samples):
    for fb in samples[:3]:
        wp, wm = fb.weyl_blocks()
        assert wp[0, 0] + wp[1, 1] + wp[2, 2] == 0
        assert wm[0, 0] + wm[1, 1] + wm[2, 2] == 0


def test_fblocks_validation():
    good = np.zeros((3, 3), dtype=object)
    asym = good.copy()
    asym[0, 1] = 1  # not symmetric
    with pytest.raises(ValueError, match="symmetric"):
        FBlocks(Ap=asym, B=good, Am=good)
    unbalanced = good.copy()
    unbalanced[0, 0] = 1  # tr Ap != tr Am
    with pytest.raises(ValueError, match="trace|tr"):
        FBlocks(Ap=unbalanced, B=good, Am=good)


def test_decompose_rejects_non_curvature():
    with pytest.raises(ValueError, match="First Bianchi"):
        decompose(relaxed_tensor(3))


def test_raw_blocks_of_valid_tensor(samples):
    fb = samples[0]
    fpp, fpm, fmp, fmm = raw_blocks(reconstruct(fb))
    assert np.array_equal(fpp, fb.Ap)
    assert np.array_equal(fpm, fb.B)
    assert np.array_equal(fmp, fb.B.T)
    assert np.array_equal(fmm, fb.Am)


def test_fblocks_json_round_trip(samples):
    fb = samples[0]
    text = fblocks_to_json(fb)
    data = json.loads(text)
    assert data["schema"] == "riemann-syzygy/1"
    assert fblocks_from_json(text) == fb


def test_fblocks_json_missing_block():
    with pytest.raises(ValueError, match="missing"):
        fblocks_from_json(json.dumps({"Ap": [[0] * 3] * 3}))

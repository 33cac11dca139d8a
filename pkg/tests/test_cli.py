"""Command-line interface: exit codes, JSON reports, reproducibility."""

import json

import pytest

from riemann_syzygy import cli
from riemann_syzygy.curvature import riemann_to_json, zeros
from riemann_syzygy.decomp import reconstruct
from riemann_syzygy.gen import random_fblocks


def run(argv, capsys):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_thooft_check(capsys):
    code, out, _ = run(["thooft-check"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["all_ok"] is True


def test_generate_deterministic(capsys):
    code, out1, _ = run(["generate", "--seed", "5", "--samples", "3"], capsys)
    assert code == 0
    code, out2, _ = run(["generate", "--seed", "5", "--samples", "3"], capsys)
    assert out1 == out2
    data = json.loads(out1)
    assert data["schema"] == "riemann-syzygy/1"
    assert len(data["samples"]) == 3


def test_generate_requires_seed(capsys):
    code, _, err = run(["generate", "--samples", "1"], capsys)
    assert code == 2
    assert "seed" in err


def test_decompose_reconstruct_round_trip(tmp_path, capsys):
    fb = random_fblocks(11)
    t = reconstruct(fb)
    path = tmp_path / "riem.json"
    path.write_text(riemann_to_json(t))
    code, out, _ = run(["decompose", str(path)], capsys)
    assert code == 0
    blocks_path = tmp_path / "blocks.json"
    blocks_path.write_text(out)
    code, out2, _ = run(["reconstruct", str(blocks_path)], capsys)
    assert code == 0
    assert json.loads(out2) == json.loads(riemann_to_json(t))


def test_decompose_invalid_tensor_exit_2(tmp_path, capsys):
    bad = zeros()
    bad[0, 1, 2, 3] = 1
    bad[1, 0, 2, 3] = -1
    bad[0, 1, 3, 2] = -1
    bad[1, 0, 3, 2] = 1
    path = tmp_path / "bad.json"
    path.write_text(riemann_to_json(bad))
    code, _, err = run(["decompose", str(path)], capsys)
    assert code == 2
    assert "Pair symmetry" in err


def test_decompose_malformed_json_exit_2(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("{not json")
    code, _, err = run(["decompose", str(path)], capsys)
    assert code == 2
    assert "error" in err


def test_verify_all_pass(capsys):
    code, out, _ = run(
        ["verify", "--set", "quadratic", "--samples", "5", "--seed", "7"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True


def test_verify_byte_identical(capsys):
    argv = ["verify", "--set", "cubic", "--samples", "4", "--seed", "7"]
    _, out1, _ = run(argv, capsys)
    _, out2, _ = run(argv, capsys)
    assert out1 == out2


def test_verify_names_selection(capsys):
    code, out, _ = run(
        ["verify", "--names", "gauss_bonnet", "--samples", "5",
         "--seed", "7"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert [r["name"] for r in data["results"]] == ["gauss_bonnet"]


def test_verify_unknown_name_exit_2(capsys):
    code, _, err = run(
        ["verify", "--names", "nope", "--seed", "7"], capsys
    )
    assert code == 2
    assert "nope" in err


def test_rank_expect_match(capsys):
    code, out, _ = run(
        ["rank", "--catalog", "quadratic", "--samples", "20", "--seed", "3",
         "--expect", "4"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 4


def test_rank_expect_mismatch_exit_1(capsys):
    code, _, _ = run(
        ["rank", "--catalog", "quadratic", "--samples", "20", "--seed", "3",
         "--expect", "5"],
        capsys,
    )
    assert code == 1


def test_rank_alias_catalog(capsys):
    code, out, _ = run(
        ["rank", "--catalog", "quartic_scalars", "--samples", "60",
         "--seed", "3", "--expect", "13"],
        capsys,
    )
    assert code == 0


def test_export_import_samples_reproduce(tmp_path, capsys):
    exported = tmp_path / "samples.json"
    argv = ["rank", "--catalog", "quadratic", "--samples", "20",
            "--seed", "3", "--export-samples", str(exported)]
    _, out1, _ = run(argv, capsys)
    code, out2, _ = run(
        ["rank", "--catalog", "quadratic",
         "--import-samples", str(exported)],
        capsys,
    )
    assert code == 0
    assert json.loads(out1)["rank"] == json.loads(out2)["rank"]


def test_invariants_table(capsys):
    code, out, _ = run(
        ["invariants", "--catalog", "quadratic", "--seed", "5",
         "--format", "table"],
        capsys,
    )
    assert code == 0
    assert "R2 = " in out


def test_discover_reports_nullspace(capsys):
    code, out, _ = run(
        ["discover", "--catalog", "quadratic", "--seed", "12345"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["nullspace"] == [[4, -16, 4, -1, 0]]

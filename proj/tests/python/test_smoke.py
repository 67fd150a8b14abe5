"""Smoke tests for the python bindings and the CLI binary."""

import json
import math
import os
import subprocess

import pytest

import nonopen as no


@pytest.fixture(scope="module")
def l2map():
    return no.Map(model="l2_weighted", gauge="weighted_l2")


def test_map_evaluation(l2map):
    e1 = no.SparseVector.unit(1)
    y = no.f_eval(l2map, e1)
    assert y.at(1) == pytest.approx(math.exp(-1), rel=1e-14)
    assert no.f_eval(l2map, no.SparseVector([])).is_zero()


def test_norms_and_gauges(l2map):
    x = no.SparseVector([(1, 3.0), (4, -4.0)])
    assert no.strong_norm(l2map, x) == pytest.approx(5.0)
    assert no.gauge_eval(l2map, no.SparseVector.unit(4)) == 0.25
    assert no.weak_norm(l2map, no.SparseVector.unit(100)) == pytest.approx(0.1)


def test_solve_roundtrip(l2map):
    x = no.SparseVector([(1, 0.5), (2, 1.0), (7, -0.25)])
    y = no.SparseVector([(1, 1.0), (2, -2.0), (5, 0.125)])
    sol = no.jf_solve(l2map, x, y)
    assert sol["log_scale"] == 0.0
    back = no.jf_apply(l2map, x, sol["solution"])
    gap = no.SparseVector(back.entries() + [(k, -v) for k, v in y.entries()])
    assert no.strong_norm(l2map, gap) <= 1e-9


def test_radial_inversion_matches_gamma(l2map):
    pre = no.f_invert_radial(l2map, no.SparseVector([(100, 0.1)]))
    gamma10 = no.gamma_sequence(2.0, [10])[0]["gamma"]
    assert pre.at(100) == pytest.approx(gamma10, abs=1e-8)
    assert gamma10 == pytest.approx(5.0495493676, abs=1e-6)


def test_certificate(l2map):
    cert = no.certify_no_preimage(l2map, 0.2, no.SparseVector.unit(100))
    assert cert["certified"]
    assert cert["threshold"] == pytest.approx(0.6590102289822608, rel=1e-12)
    with pytest.raises(no.ParameterError):
        no.certify_no_preimage(l2map, 1.5, no.SparseVector.unit(1))


def test_classification(l2map):
    assert no.classify_point(l2map, no.SparseVector([]))["class"] == "critical"
    tiny = no.classify_point(l2map, no.SparseVector.unit(3, 1e-8))
    assert tiny["class"] == "regular"
    assert tiny["log_scale_used"]
    assert tiny["max_residual"] <= 1e-9


def test_grid_model():
    grid = no.Map(model="lp_grid", gauge="grid_square", p=4.0, cells=8)
    f = no.GridFunction(8, [1.0] * 8)
    assert no.strong_norm(grid, f) == pytest.approx(1.0)
    assert no.gauge_eval(grid, f) == pytest.approx(1.0)


def test_weaksep_witness():
    x_q, weak, bound = no.weaksep_witness(3)
    assert x_q.entries() == [(4, 1.0)]
    assert weak == 0.25
    assert bound == pytest.approx(2 ** -1.5)


def test_q5_split():
    r = no.remainder_bounds_q5(no.SparseVector.unit(1), no.SparseVector.unit(1, 0.1))
    assert r["A"] == pytest.approx(0.080125, rel=1e-12)
    assert r["B"] == pytest.approx(0.030385, rel=1e-12)
    assert abs(r["main_term"] + r["A"] + r["B"] - r["total"]) <= 1e-14


def test_report_determinism():
    a = no.nonopen_json_text(50, seed=7)
    b = no.nonopen_json_text(50, seed=7)
    assert a == b
    assert json.loads(a)["all_satisfied"]
    assert no.gradcheck_json_text(seed=7, samples=20) == no.gradcheck_json_text(
        seed=7, samples=20
    )


def test_invalid_config_raises():
    with pytest.raises(no.ConfigError):
        no.Map(gauge="lq_even", q=3)


@pytest.mark.skipif("NONOPEN_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_end_to_end(tmp_path):
    cli = os.environ["NONOPEN_CLI"]

    out = subprocess.run([cli, "models"], capture_output=True, text=True, check=True)
    assert "l2_weighted / weighted_l2" in out.stdout

    r1 = subprocess.run(
        [cli, "nonopen", "--n-max", "25", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    r2 = subprocess.run(
        [cli, "nonopen", "--n-max", "25", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert r1.stdout == r2.stdout
    assert r1.stdout.startswith("n,gamma,sqrt_n,z_norm,inv_norm,satisfied")

    vec = tmp_path / "y.json"
    vec.write_text(json.dumps({"kind": "sparse", "entries": [[100, 1.0]]}))
    cert = subprocess.run(
        [cli, "certify", "--delta", "0.2", str(vec)], capture_output=True, text=True
    )
    assert cert.returncode == 0
    payload = json.loads(cert.stdout)
    assert payload["certificate"]["certified"]
    assert payload["cross_check"]["outside_unit_ball"]

    bad = subprocess.run(
        [cli, "gradcheck", "--gauge", "lq_even", "--q", "3"], capture_output=True
    )
    assert bad.returncode == 2

import math

import pytest

import looptx

THETA = {
    "vertices": ["v0", "v1"],
    "edges": [
        {"id": "e1", "from": "v0", "to": "v1"},
        {"id": "e2", "from": "v0", "to": "v1"},
        {"id": "e3", "from": "v0", "to": "v1"},
    ],
    "base": "v0",
}
COMMUTATOR = {"kind": "loop", "steps": ["e2", "~e1", "e3", "~e1", "e1", "~e2", "e1", "~e3"]}


def test_generators_on_theta_graph():
    basis = looptx.generators(THETA)
    assert basis["rank"] == 2
    assert basis["tree"] == ["e1"]
    assert basis["generators"][0]["steps"] == ["e2", "~e1"]


def test_decompose_and_abelianize():
    word = {"kind": "loop", "steps": ["e2", "~e3"]}
    assert looptx.decompose(THETA, word) == ["b1", "~b2"]
    assert looptx.abelianize(THETA, word) == [1, -1]
    assert looptx.path_abelianize(THETA, word) == [0, 1, -1]


def test_commutator_is_in_kernel():
    assert looptx.kernel_test(THETA, COMMUTATOR)
    assert not looptx.kernel_test(THETA, {"kind": "loop", "steps": ["e2", "~e1"]})


def test_interpolation_and_wilson():
    conn = looptx.interpolate(THETA, [math.pi / 2, math.pi])
    w = looptx.wilson(THETA, conn, {"kind": "loop", "steps": ["e2", "~e1"]})
    assert abs(w - 1j) < 1e-15


def test_transform_round_trip():
    cyl = {"level": {"ambient": 2, "basis": [[2, 1]]},
           "poly": {"dim": 1, "coeffs": [{"k": [1], "re": 0.5, "im": -1.0}]}}
    state = looptx.loop_transform(cyl)
    assert state["support"] == [{"h": [2, 1], "re": 0.5, "im": -1.0}]
    back = looptx.loop_transform(looptx.inverse_transform(state))
    assert back == state


def test_fft_oracle_matches_fourier():
    poly = {"dim": 1, "coeffs": [{"k": [2], "re": 1.0, "im": 0.5}, {"k": [-1], "re": -0.25, "im": 0.0}]}
    exact = {tuple(e["k"]): complex(e["re"], e["im"]) for e in looptx.fourier(poly)["values"]}
    fast = {tuple(e["k"]): complex(e["re"], e["im"]) for e in looptx.fft_oracle(poly, 7)["values"]}
    for k, c in exact.items():
        assert abs(fast.get(k, 0) - c) < 1e-12


def test_signed_density_rejected():
    density = {"dim": 1, "hermitian": True,
               "coeffs": [{"k": [1], "re": 1, "im": 0}, {"k": [-1], "re": 1, "im": 0}]}
    assert abs(looptx.psd_test(density, [[0], [1]]) + 1.0) < 1e-9
    value, theta = looptx.grid_minimum(density, 65)
    assert abs(value + 2.0) < 1e-9
    assert abs(theta[0] - math.pi) < 1e-4


def test_lattice_helpers():
    assert looptx.refinement_matrix({"ambient": 2, "basis": [[2, 1]]}, {"ambient": 2, "basis": [[1, 0], [0, 1]]}) == [[2], [1]]
    assert looptx.refinement_matrix({"ambient": 2, "basis": [[1, 1]]}, {"ambient": 2, "basis": [[2, 0], [0, 1]]}) is None
    assert looptx.hnf_solve([[2, 1]], 2, [4, 2]) == [2]
    assert looptx.hnf_solve([[2, 1]], 2, [1, 1]) is None


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        looptx.generators({"vertices": ["v0"], "edges": [], "base": "v9"})


def test_cli_and_suites():
    code, report, _ = looptx.cli("kernel-test", "--graph", looptx._s(THETA), "--word", looptx._s(COMMUTATOR))
    assert code == 0 and report["results"][0]["value"] == [0, 0]
    results = looptx.run_suites(42, 0.1)
    assert len(results) == 9
    assert all(r["passed"] for r in results)

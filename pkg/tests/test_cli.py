import json
import subprocess
import sys

from forest_spectra.cli import run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_spectrum_k4(capsys):
    code, report = capture(capsys, ["spectrum", "--complete", "4", "--k", "1"])
    assert code == 0
    assert report["verdict"] == "verified"
    assert report["result"]["eigenvalues"] == [
        {"multiplicity": 1, "value": "16"},
        {"multiplicity": 2, "value": "-2"},
        {"multiplicity": 3, "value": "-4"},
    ]
    assert report["result"]["sign_profile"] == {"positive": 1, "zero": 0, "negative": 5}
    assert report["result"]["determinant"] == "-4096"


def test_spectrum_boundary_bipartite(capsys):
    code, report = capture(capsys, ["spectrum", "--bipartite", "2", "2", "--k", "2"])
    assert code == 0
    assert report["verdict"] == "computed"  # outside the theorem hypotheses
    assert report["result"]["eigenvalues"] == [
        {"multiplicity": 1, "value": "3"},
        {"multiplicity": 3, "value": "-1"},
    ]


def test_spectrum_matrix_flag(capsys):
    code, report = capture(capsys, ["spectrum", "--complete", "4", "--k", "2", "--matrix"])
    assert code == 0
    assert report["result"]["matrix"][0] == ["0", "1", "1", "1", "1", "1"]


def test_spectrum_requires_exactly_one_graph(capsys):
    code = run(["spectrum", "--complete", "4", "--bipartite", "2", "2", "--k", "1"])
    assert code == 2
    code = run(["spectrum", "--k", "1"])
    assert code == 2


def test_unknown_flag_exits_2(capsys):
    assert run(["spectrum", "--complete", "4", "--k", "1", "--bogus"]) == 2


def test_out_of_range_k_exits_2(capsys):
    assert run(["spectrum", "--complete", "4", "--k", "9"]) == 2


def test_bijections_bipartite(capsys):
    code, report = capture(capsys, ["bijections", "--bipartite", "2", "3", "--k", "1"])
    assert code == 0
    assert report["verdict"] == "verified"
    assert all(rec["verified"] for rec in report["result"]["bijections"])
    ineq = report["result"]["inequalities"]
    assert ineq["satisfied"]
    assert ineq["r_minus_p"] == 0 and not ineq["left_strict_expected"]


def test_bijections_complete(capsys):
    code, report = capture(capsys, ["bijections", "--complete", "5", "--k", "1", "--w", "5"])
    assert code == 0
    assert report["verdict"] == "verified"
    assert report["result"]["split_bijection"]["verified"]
    assert all(s["split_sizes_equal"] for s in report["result"]["subsets"])


def test_slp_k4(capsys):
    code, report = capture(capsys, ["slp", "--complete", "4", "--r", "3"])
    assert code == 0
    assert report["verdict"] == "verified"
    assert report["result"]["slp_holds"] is True
    assert report["result"]["hilbert_function"] == [1, 6, 6, 1]
    assert report["result"]["hessians"][-1]["determinant"] == "-4096"


def test_slp_custom_point(capsys):
    code, report = capture(
        capsys, ["slp", "--complete", "4", "--r", "3", "--point", "1,1,1,1,1,1"]
    )
    assert code == 0
    assert report["verdict"] == "computed"
    assert report["input"]["all_ones"] is False


def test_slp_bad_point_exits_2(capsys):
    assert run(["slp", "--complete", "4", "--r", "3", "--point", "1,2"]) == 2
    assert run(["slp", "--complete", "4", "--r", "3", "--point", "1,1,1,1,1,x"]) == 2


def test_matroid_verify(capsys):
    code, report = capture(capsys, ["matroid", "--complete", "4", "--r", "2", "--verify-axioms"])
    assert code == 0
    assert report["verdict"] == "verified"
    assert report["result"]["exchange_axiom"] is True
    assert report["result"]["bases_are_r_edge_forests"] is True
    assert report["result"]["basis_count"] == 15


def test_enumerate_count_only(capsys):
    code, report = capture(capsys, ["enumerate", "--complete", "4", "--k", "3", "--count-only"])
    assert code == 0
    assert report["result"] == {"count": 6}


def test_enumerate_lists_forests(capsys):
    code, report = capture(capsys, ["enumerate", "--complete", "4", "--k", "1"])
    assert code == 0
    assert report["result"]["count"] == 16
    assert report["result"]["forests"][0] == ["1-2", "1-3", "1-4"]


def test_reports_are_deterministic(capsys):
    _, first = capture(capsys, ["spectrum", "--complete", "5", "--k", "2"])
    _, second = capture(capsys, ["spectrum", "--complete", "5", "--k", "2"])
    first.pop("timing_ms")
    second.pop("timing_ms")
    assert first == second


def test_thread_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("FOREST_SPECTRA_THREADS", "2")
    code, report = capture(capsys, ["enumerate", "--complete", "4", "--k", "4"])
    assert code == 0
    assert report["input"]["thread_cap"] == 2
    monkeypatch.setenv("FOREST_SPECTRA_THREADS", "zero")
    assert run(["enumerate", "--complete", "4", "--k", "4"]) == 2


def test_verification_failure_exits_1(capsys, monkeypatch):
    # a theorem-check mismatch surfaces as a failed report with exit code 1
    from forest_spectra.cli import _HANDLERS
    from forest_spectra.errors import VerificationFailure

    def boom(args):
        raise VerificationFailure("synthetic mismatch")

    monkeypatch.setitem(_HANDLERS, "enumerate", boom)
    code, report = capture(capsys, ["enumerate", "--complete", "4", "--k", "1"])
    assert code == 1
    assert report["verdict"] == "failed"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "forest_spectra.cli", "spectrum", "--complete", "4", "--k", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["verdict"] == "computed"  # k = n-2 boundary
    assert report["result"]["eigenvalues"][0]["value"] == "5"

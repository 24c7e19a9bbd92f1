"""End-to-end tests for the ``pdgp`` command line, run in-process."""

import json

import pytest

from apps.pdgp.core.errors import CoefficientOverflow, VerificationMismatch
from apps.pdgp.main import main
from apps.pdgp.models.schemas import VerifyLine, VerifyReport
from apps.pdgp.services import verification


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# a. compute
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "argv, expected",
    [
        (["compute", "--n", "3", "--edges", "0-1,1-2"], "2 + 6*z^2"),
        (["compute", "--gen", "kn:4"], "8*z^2 + 8*z^4"),
        (["compute", "--gen", "kn:2", "--invariant", "refined"], "z^2 + 2*w + w^2*z^2"),
        (["compute", "--n", "3", "--edges", "0-1,1-2", "--invariant", "skew"], "2*w + w^3"),
        (["compute", "--gen", "kn:2", "--invariant", "skew-refined"], "z^2 + 2*w + w^2"),
        (["compute", "--gen", "kn:5", "--invariant", "rank"], "z^4"),
        (["compute", "--gen", "kn:2", "--invariant", "kpart", "--k", "2"], "2"),
        (["compute", "--gen", "kn:2", "--invariant", "kpart", "--k", "2", "--unordered"], "1"),
        (["compute", "--gen", "path:3", "--invariant", "recursive"], "2 + 6*z^2"),
        (["compute", "--gen", "empty:3"], "8"),
        (["compute", "--gen", "cycle:4"], "2 + 10*z^2 + 4*z^4"),
    ],
)
def test_compute_text(capsys, argv, expected):
    code, out, err = _run(capsys, *argv)
    assert code == 0, err
    assert out == expected + "\n"


def test_compute_json(capsys):
    code, out, _err = _run(capsys, "compute", "--gen", "kmn:2,2", "--json")
    assert code == 0
    assert json.loads(out) == {"var": "z", "terms": [[0, "2"], [2, "10"], [4, "4"]]}


def test_compute_json_bivariate(capsys):
    code, out, _err = _run(capsys, "compute", "--gen", "kn:2", "--invariant", "refined", "--json")
    assert code == 0
    assert json.loads(out) == {"vars": ["w", "z"], "terms": [[0, 2, "1"], [1, 0, "2"], [2, 2, "1"]]}


def test_compute_graph_file(capsys, tmp_path):
    path = tmp_path / "k22.txt"
    path.write_text("# K_{2,2}\n4\n0 2\n0 3\n1 2\n1 3\n", encoding="ascii")
    code, out, _err = _run(capsys, "compute", "--graph", str(path))
    assert code == 0
    assert out == "2 + 10*z^2 + 4*z^4\n"


def test_output_identical_across_thread_counts(capsys):
    outputs = set()
    for threads in ("1", "2", "4"):
        code, out, _err = _run(capsys, "compute", "--gen", "random:14,0.5,7", "--threads", threads)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


# ---------------------------------------------------------------------------
# b. chord
# ---------------------------------------------------------------------------
def test_chord_both(capsys):
    code, out, _err = _run(capsys, "chord", "--word", "ABAB", "--via", "both")
    assert code == 0
    assert out == "rank:   2 + 2*z^2\nribbon: 2 + 2*z^2\nMATCH\n"


def test_chord_rank_only(capsys):
    code, out, _err = _run(capsys, "chord", "--word", "ABCABC", "--via", "rank")
    assert code == 0
    assert out == "8*z^2\n"


def test_chord_json(capsys):
    code, out, _err = _run(capsys, "chord", "--word", "AABB", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "AABB"
    assert data["match"] is True
    assert data["rank"]["terms"] == [[0, "4"]]


# ---------------------------------------------------------------------------
# c. project
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "argv, expected",
    [
        (["project", "--invariant", "pdgp", "--gen", "kn:2"], "-2 + 2*z^2\n"),
        (["project", "--invariant", "skew", "--gen", "kn:2"], "1\nnote: constant\n"),
        (["project", "--invariant", "skew", "--gen", "kn:1"], "w\nnote: non-constant\n"),
        (["project", "--invariant", "pdgp", "--gen", "kn:1"], "2\n"),
    ],
)
def test_project(capsys, argv, expected):
    code, out, _err = _run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_project_json(capsys):
    code, out, _err = _run(capsys, "project", "--invariant", "skew", "--gen", "kn:2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["constant"] is True
    assert data["polynomial"] == {"var": "w", "terms": [[0, "1"]]}


# ---------------------------------------------------------------------------
# d. verify
# ---------------------------------------------------------------------------
def test_verify_fourterm_small(capsys):
    code, out, _err = _run(capsys, "verify", "fourterm", "--nmax", "4")
    assert code == 0
    assert "n=4: 64 graphs × 12 pairs × 4 invariants, 0 defects" in out


def test_verify_theorem1_small(capsys):
    code, out, _err = _run(capsys, "verify", "theorem1", "--chords-max", "4")
    assert code == 0
    assert "m=4: 105 diagrams, 0 mismatches" in out


def test_verify_closed_json(capsys):
    code, out, _err = _run(capsys, "verify", "closed", "--kn-max", "6", "--kmn-max", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["check"] == "closed"
    assert data["defects"] == 0


def test_verify_defects_exit_with_mismatch_code(capsys, monkeypatch):
    report = VerifyReport(
        check="closed",
        lines=[VerifyLine(label="K_n, n<=3", checked=3, defects=1)],
        checked=3,
        defects=1,
        first_defect="K_3: 8*z^2 != 8",
    )
    monkeypatch.setattr(verification, "verify_closed_forms", lambda *_args: report)
    code, out, _err = _run(capsys, "verify", "closed")
    assert code == VerificationMismatch.exit_code == 5
    assert out.splitlines()[-1] == "first defect: K_3: 8*z^2 != 8"


@pytest.mark.slow
def test_verify_fourterm_five(capsys):
    code, out, _err = _run(capsys, "verify", "fourterm", "--nmax", "5")
    assert code == 0
    assert "1024 graphs × 20 pairs × 4 invariants, 0 defects" in out


@pytest.mark.slow
def test_verify_theorem1_five(capsys):
    code, out, _err = _run(capsys, "verify", "theorem1", "--chords-max", "5")
    assert code == 0
    assert "945 diagrams, 0 mismatches" in out


@pytest.mark.slow
def test_verify_beck_six(capsys):
    code, out, _err = _run(capsys, "verify", "beck", "--chords-max", "6")
    assert code == 0
    assert "10395 diagrams, 0 mismatches" in out


# ---------------------------------------------------------------------------
# e. bench
# ---------------------------------------------------------------------------
def test_bench_reports_identical_output(capsys):
    code, out, _err = _run(capsys, "bench", "--gen", "random:12,0.5,1", "--threads-list", "1,2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("threads=1: ")
    assert lines[-1] == "n=12: identical output across 2 run(s)"


# ---------------------------------------------------------------------------
# f. Errors and exit codes
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "argv",
    [
        ["chord", "--word", "ABA"],
        ["compute", "--n", "2", "--edges", "0-0"],
        ["compute", "--n", "2", "--edges", "0-5"],
        ["compute", "--edges", "0-1"],
        ["compute", "--gen", "kn:3", "--edges", "0-1", "--n", "2"],
        ["compute", "--gen", "star:3"],
        ["compute", "--gen", "kn:-1"],
        ["compute", "--gen", "kmn:-1,2"],
        ["compute", "--gen", "random:5,0.5,-1"],
        ["verify", "selfdual", "--chords-max", "3", "--seed", "-1"],
        ["compute", "--gen", "kn:2", "--invariant", "kpart", "--k", "3"],
        ["compute", "--gen", "kn:3", "--threads", "0"],
        ["project", "--invariant", "kpart", "--gen", "kn:2"],
        ["bench", "--gen", "kn:3", "--threads-list", "1,x"],
    ],
)
def test_parse_errors_exit_2(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1, err


def test_unknown_command_exits_2(capsys):
    code, out, _err = _run(capsys, "frobnicate")
    assert code == 2
    assert out == ""


def test_cap_exceeded_exit_3(capsys):
    code, out, err = _run(capsys, "compute", "--gen", "kn:30")
    assert code == 3
    assert out == ""
    assert "exceeds cap 24" in err


def test_cap_override_warns_and_applies(capsys):
    code, out, err = _run(capsys, "compute", "--gen", "kn:5", "--cap", "4")
    assert code == 3
    assert out == ""
    assert "Size caps overridden to 4" in err


def test_cap_override_allows_larger_sweep(capsys):
    code, _out, err = _run(capsys, "verify", "closed", "--kn-max", "3", "--kmn-max", "2", "--cap", "30")
    assert code == 0
    assert "overridden to 30" in err


def test_overflow_maps_to_exit_4():
    assert CoefficientOverflow(1 << 130).exit_code == 4

import json

import pytest

import seshadri_cli
from seshadri_cli import main


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_seshadri_scroll(capsys):
    status, out, _ = run(capsys, "seshadri", "scroll", "5")
    assert status == 0
    assert out.splitlines()[0] == "epsilon = 4/5"


def test_classify_conic(capsys):
    status, out, _ = run(capsys, "classify", "1", "2", "2")
    assert status == 0
    assert out.strip() == "case (6)"


def test_classify_json_carries_case_number(capsys):
    _, out, _ = run(capsys, "--json", "classify", "0", "4", "1")
    payload = json.loads(out)
    assert payload["tag"] == "(5)"
    assert payload["rational"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["oracle", "verify-special", "3", "2", "7", "3", "2", "1"],
        ["verify", "suite", "--only", "plane-two-points"],
    ],
)
def test_descriptive_aliases(capsys, argv):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert "PASS" in out


def test_bounds_notes_plane_witness(capsys):
    status, out, _ = run(capsys, "bounds", "1", "2")
    assert status == 0
    assert "general bound sqrt(2/5)" in out
    assert "1/2 < sqrt(2/5)" in out


def test_bounds_k3(capsys):
    status, out, _ = run(capsys, "bounds", "6", "6", "--k3")
    assert status == 0
    assert "k3: guaranteed(sqrt(8/9))" in out
    status, _, err = run(capsys, "bounds", "5", "6", "--k3")
    assert status == 1
    assert "even" in err


def test_bounds_k3_at_a_single_point(capsys):
    status, out, _ = run(capsys, "bounds", "6", "1", "--k3")
    assert status == 0
    assert out.strip() == "k3: no-guarantee (r < max(L^2, 2) = 6)"
    status, _, _ = run(capsys, "bounds", "6", "1")
    assert status == 1


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["intersect", "1", "1", "2", "1", "3"], "= 4"),
        (["ample", "2", "1", "3"], "ample: true"),
        (["h0", "2", "1", "3"], "h0 = 6"),
        (["genus", "0", "2", "2"], "p_a = 1"),
        (["seshadri", "exact", "3", "2", "7", "3", "2", "1"], "epsilon = 1"),
        (["seshadri", "anyq", "3", "4"], "epsilon = 3/4"),
        (["guarantee", "1", "1", "2", "8"], "guaranteed(sqrt(15/44))"),
        (["oracle", "search", "3", "2", "7", "2", "--max-a", "3", "--max-b", "15", "--max-mult", "6"], "epsilon <= 2"),
        (["oracle", "verify-thm31", "3", "2", "7", "3", "2", "1"], "PASS"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert expected in out


@pytest.mark.parametrize(
    "argv",
    [
        ["seshadri", "exact", "2", "1", "3", "3", "1", "0"],
        ["ample", "2", "x", "3"],
        ["nonsense"],
        ["seshadri", "scroll", "2"],
        ["guarantee", "1", "1", "1", "10"],
    ],
)
def test_precondition_errors_exit_1(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 1
    assert out == ""
    assert "error" in err


def test_scroll_with_tiny_caps_exits_2(capsys):
    status, _, err = run(capsys, "seshadri", "scroll", "5", "--max-a", "1", "--max-b", "1")
    assert status == 2
    assert "did not meet" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["--json", "seshadri", "scroll", "5"],
        ["seshadri", "exact", "3", "2", "7", "3", "2", "1", "--json"],
        ["--json", "--approx", "bounds", "4", "5"],
        ["--json", "classify", "1", "2", "3"],
        ["--json", "oracle", "search", "0", "1", "1", "2"],
        ["--json", "table", "scroll"],
    ],
)
def test_structured_output_round_trips(capsys, argv):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, indent=2) == out.rstrip("\n")


def test_json_payload_contents(capsys):
    _, out, _ = run(capsys, "--json", "seshadri", "scroll", "5")
    payload = json.loads(out)
    assert payload["value"] == "4/5"
    assert payload["certificate"] == {"tag": "scroll-divisor", "class": [1, 2], "s": 5}
    assert payload["theorem"]["name"] == "scroll-family"


def test_approx_is_labelled(capsys):
    _, out, _ = run(capsys, "--approx", "seshadri", "scroll", "5")
    assert "epsilon ~ 0.8 (approximation)" in out


def test_table_csv(capsys, tmp_path):
    path = tmp_path / "scroll.csv"
    status, out, _ = run(capsys, "table", "scroll", "--csv", str(path))
    assert status == 0
    assert path.read_text().splitlines()[0].startswith("r,e,L,")


def test_verify_suite_subset_with_exports(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(seshadri_cli, "EXPORT_ROOT", str(tmp_path))
    status, out, _ = run(capsys, "verify", "paper", "--only", "plane-two-points", "k3-gate", "--pdf", "--json-out")
    assert status == 0
    assert "2/2 checks passed" in out
    run_dirs = list(tmp_path.iterdir())
    assert len(run_dirs) == 1
    names = sorted(p.suffix for p in run_dirs[0].iterdir())
    assert names == [".json", ".pdf"]


def test_verify_suite_failure_exits_2(capsys, monkeypatch):
    from utils import checks

    def failing():
        return checks.CheckResult("broken", "broken", False, "forced")

    monkeypatch.setitem(checks.CHECKS, "plane-two-points", failing)
    status, out, _ = run(capsys, "verify", "paper", "--only", "plane-two-points")
    assert status == 2
    assert "FAIL" in out

import io
import json

import pytest

from brocard import relations
from brocard.cli import main

V345 = '{"vertices": [[0, 0], [4, 0], [0, 3]]}'
BROCARD345 = '{"vertices": [["32/25", "27/50"], ["18/25", "3/2"], ["2", "24/25"]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_centers(capsys):
    code, out, _ = run(capsys, "centers", V345)
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "centers"
    assert doc["centers"]["tarry"] == ["324/193", "768/193"]
    assert doc["centers"]["steiner"] == ["448/193", "-189/193"]


def test_verify_all_pass(capsys):
    code, out, _ = run(capsys, "verify", V345, "--pretty")
    assert code == 0
    claims = json.loads(out)["claims"]
    assert len(claims) == len(relations.CLAIM_IDS) and all(c["passed"] for c in claims)


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", V345, "--claim", "T4")
    assert code == 0
    assert [c["claim_id"] for c in json.loads(out)["claims"]] == ["T4"]


def test_spec_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "t.json"
    path.write_text('{"sides_squared": [25, 9, 16]}')
    assert run(capsys, "verify", str(path))[0] == 0

    monkeypatch.setattr("sys.stdin", io.StringIO(V345))
    assert run(capsys, "centers", "-")[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", '{"vertices": [[0, 0], [1, 0]]}'],
        ["verify", "not json"],
        ["verify", "/nonexistent/spec.json"],
        ["verify", '{"sides_squared": [2, 1, 1]}'],
        ["verify", V345, "--claim", "Z9"],
        ["frobnicate"],
        [],
        ["search", "--samples", "-3"],
        ["figure", V345, "--out", "-", "--show", "bogus"],
    ],
)
def test_exit_1_on_bad_input(capsys, argv):
    assert run(capsys, *argv)[0] == 1


@pytest.mark.parametrize(
    "spec", ['{"vertices": [[0, 0], [1, 1], [2, 2]]}', '{"sides_squared": [1, 4, 9]}']
)
def test_exit_2_on_degenerate(capsys, spec):
    code, _, err = run(capsys, "verify", spec)
    assert code == 2 and "degenerate" in err


def test_exit_3_on_failed_claim(capsys, monkeypatch):
    def broken(T, cs, check):
        check(False, "forced failure")
        return "broken"

    monkeypatch.setitem(relations._CLAIMS, "T4", broken)
    code, out, _ = run(capsys, "verify", V345)
    assert code == 3
    failed = [c["claim_id"] for c in json.loads(out)["claims"] if not c["passed"]]
    assert failed == ["T4"]


def test_exit_4_on_internal_error(capsys, monkeypatch):
    def boom(T, cs, check):
        raise RuntimeError("boom")

    monkeypatch.setitem(relations._CLAIMS, "L1", boom)
    code, _, err = run(capsys, "verify", V345)
    assert code == 4 and "internal error" in err


def test_rank(capsys):
    code, out, _ = run(capsys, "rank", V345, BROCARD345)
    assert code == 0
    profile = json.loads(out)["rank_profiles"][0]
    assert profile["homo_rank"] >= 3 and profile["ortho_rank"] >= 1


def test_search_is_deterministic(capsys):
    argv = ["search", "--seed", "7", "--samples", "200"]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    assert run(capsys, *argv)[1] == first
    doc = json.loads(first)
    assert doc["seeds"] == [7] and doc["config"]["samples"] == 200


def test_figure(capsys, tmp_path):
    out = tmp_path / "f.svg"
    assert run(capsys, "figure", V345, "--out", str(out), "--show", "sondat,brocard", "--show", "cevians")[0] == 0
    code, stdout, _ = run(capsys, "figure", V345, "--out", "-", "--show", "cevians", "--show", "brocard,sondat")
    assert code == 0 and stdout == out.read_text()

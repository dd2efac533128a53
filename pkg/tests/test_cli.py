import io
import json
import subprocess
import sys

from pdskit.cli import run
from pdskit.pds import CandidateSet, load_candidates


def call(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, out)
    return code, out.getvalue()


def test_sieve_225_infeasible():
    code, out = call(["sieve", "--v", "225"])
    assert code == 1
    assert out.startswith("Infeasible (R2):") and "5 ≡ 1 (mod 4)" in out


def test_sieve_441_open():
    code, out = call(["sieve", "--v", "441"])
    assert code == 0 and out.startswith("Open")


def test_sieve_json_schema():
    code, out = call(["sieve", "--v", "13", "--json"])
    data = json.loads(out)
    assert code == 0
    assert data == {"schema": "pds-kit/1", "v": 13, "kind": "KnownExists",
                    "rule": "PaleyField", "detail": data["detail"]}
    assert out.endswith("\n")


def test_paley_then_verify(monkeypatch):
    code, emitted = call(["paley", "--q", "13"])
    assert code == 0
    code, out = call(["verify"], stdin=emitted, monkeypatch=monkeypatch)
    assert code == 0 and "(13, 6, 2, 3)" in out


def test_verify_json_and_failure(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"group": "Z13", "members": ["(1)", "(2)", "(5)"]}))
    code, out = call(["verify", str(path), "--json"])
    report = json.loads(out)
    assert code == 1 and report["is_pds"] is False and report["failing_element"]


def test_verify_rejects_garbage(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"group": "Q7", "members": []}')
    code, _ = call(["verify", str(path)])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert call(["frobnicate"])[0] == 2
    assert call(["sieve"])[0] == 2
    assert call(["sieve", "--v", "9", "--bogus"])[0] == 2
    assert call(["paley", "--q", "7"])[0] == 2
    assert call(["search", "--group", "Z13", "--paley"])[0] == 2  # orbit mode with nonsquare Delta
    assert call(["search", "--group", "Z9"])[0] == 2
    assert "usage" in capsys.readouterr().err


def test_search_json_round_trip(monkeypatch):
    code, out = call(["search", "--group", "Z3^2", "--paley", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["complete"] and len(data["solutions"]) == 6
    code, verified = call(["verify", "--json"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    reports = [json.loads(line) for line in verified.splitlines()]
    assert all(r["params"] == [9, 4, 1, 2] for r in reports)


def test_search_brute_and_params():
    code, out = call(["search", "--group", "Z13", "--paley", "--mode", "brute", "--limit", "1"])
    assert code == 0 and "1 solution(s)" in out and "truncated" in out
    code, out = call(["search", "--group", "Z3^2", "--params", "9,3,0,1"])
    assert code == 1 and out.startswith("0 solution(s)")


def test_atlas_lines_and_determinism():
    code, first = call(["atlas", "--max", "200", "--json"])
    _, second = call(["atlas", "--max", "200", "--json"])
    lines = first.splitlines()
    assert code == 0 and first == second
    assert [json.loads(line)["v"] for line in lines] == list(range(5, 201, 4))


def test_paley_output_round_trips():
    _, out = call(["paley", "--q", "49"])
    (D,) = load_candidates(out)
    assert D == CandidateSet.from_json(out) and len(D) == 24


def test_console_pipeline():
    paley = subprocess.run([sys.executable, "-m", "pdskit", "paley", "--q", "13"],
                           capture_output=True, text=True, check=True)
    verify = subprocess.run([sys.executable, "-m", "pdskit", "verify"], input=paley.stdout,
                            capture_output=True, text=True)
    assert verify.returncode == 0
    assert verify.stdout.strip() == "PDS (13, 6, 2, 3) regular nontrivial"
    sieve = subprocess.run([sys.executable, "-m", "pdskit", "sieve", "--v", "225"],
                           capture_output=True, text=True)
    assert sieve.returncode == 1

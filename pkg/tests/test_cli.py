from __future__ import annotations

import json
from pathlib import Path

import pytest

from realquintic.core.config import load_presets
from realquintic.run.__main__ import main
from realquintic.run.orchestrator import Pipeline
from realquintic.run.reproduce import reproduce

MODULE = "realquintic.run"


def test_help_lists_commands(run_module) -> None:
    res = run_module(MODULE, ["--help"])
    assert res.returncode == 0, res.output
    for cmd in ("lattice", "find-twist", "validate-twist", "betti", "check-core", "reproduce"):
        assert cmd in res.stdout


def test_bad_flag_is_usage_error(run_module) -> None:
    res = run_module(MODULE, ["betti", "--kind", "sextic"])
    assert res.returncode == 2
    assert "invalid choice" in res.stderr


def test_betti_json_flags_open_reference(capsys) -> None:
    code = main(["betti", "--kind", "twisted", "--preset", "mirror-quintic", "--rank", "0", "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["b"] == [1, 101, 101, 1]
    assert payload["reference_b1"] == 100
    assert any(f.startswith("OPEN") for f in payload["flags"])
    assert payload["meta"]["command"] == "betti"


def test_betti_k3(capsys) -> None:
    assert main(["betti", "--kind", "k3-twisted"]) == 0
    out = capsys.readouterr().out
    assert "genus: 9" in out


def test_betti_out_of_range_rank_is_input_error() -> None:
    assert main(["betti", "--kind", "untwisted", "--rank", "500"]) == 2


def test_check_core_logs_each_check(tmp_path: Path, capsys) -> None:
    assert main(["check-core", "--log-dir", str(tmp_path), "--run-id", "core"]) == 0
    assert "overall: FAIL" not in capsys.readouterr().out

    lines = (tmp_path / "core" / "events.jsonl").read_text(encoding="utf-8").splitlines()
    checks = [json.loads(line)["meta"] for line in lines if json.loads(line)["event"] == "check"]
    assert checks and all(c["passed"] for c in checks)
    assert any(c["check"] == "linear_part_identity" for c in checks)


def test_missing_and_malformed_twist_files(table_file: Path, tmp_path: Path) -> None:
    assert main(["validate-twist", str(tmp_path / "absent.json"), "--table", str(table_file)]) == 2

    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["validate-twist", str(bad), "--table", str(table_file)]) == 2

    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"twist": ["V0", "G1:2"]}), encoding="utf-8")
    assert main(["validate-twist", str(wrong), "--table", str(table_file)]) == 2


def test_zero_twist_certificate_fails(table_file: Path, tmp_path: Path) -> None:
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"twist": []}), encoding="utf-8")
    assert main(["validate-twist", str(empty), "--table", str(table_file)]) == 1


def test_find_then_validate_twist(run_module, table_file: Path, tmp_path: Path) -> None:
    cert = tmp_path / "twist.json"
    res = run_module(MODULE, ["find-twist", "--table", str(table_file), "--out", str(cert)])
    assert res.returncode == 0, res.output
    payload = json.loads(cert.read_text(encoding="utf-8"))
    assert payload["verified"] is True
    assert payload["rank_untwisted"] == 73
    assert payload["twist"]

    res = run_module(MODULE, ["validate-twist", str(cert), "--table", str(table_file)])
    assert res.returncode == 0, res.output
    assert "overall: PASS" in res.stdout


def test_log_dir_writes_events(table_file: Path, tmp_path: Path, capsys) -> None:
    log_dir = tmp_path / "logs"
    code = main(["beta-rank", "--table", str(table_file), "--log-dir", str(log_dir), "--run-id", "r1"])
    assert code == 0
    captured = capsys.readouterr()
    assert "73" in captured.out
    assert "Run logs:" in captured.err

    events_path = log_dir / "r1" / "events.jsonl"
    events = [json.loads(line) for line in events_path.read_text(encoding="utf-8").splitlines()]
    kinds = [e["event"] for e in events]
    assert kinds[0] == "run_start"
    assert kinds[-1] == "run_end"
    assert "stage" in kinds


def test_faces_with_svg(table_file: Path, tmp_path: Path, capsys) -> None:
    svg_dir = tmp_path / "svg"
    assert main(["faces", "--table", str(table_file), "--svg", str(svg_dir), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["faces"]) == 10
    assert len(list(svg_dir.glob("face_*.svg"))) == 10


def test_reproduce_in_process(table) -> None:
    pipe = Pipeline()
    pipe.table = table
    summary = reproduce(pipe, load_presets(), seed=0)
    assert summary.passed, summary.to_text()
    rows = {r["quantity"]: r for r in summary.rows}
    assert rows["rank beta"]["computed"] == 73
    assert rows["b1(twisted mirror quintic)"]["status"] == "OPEN"
    assert rows["sum b(twisted)"]["computed"] == 204


@pytest.mark.parametrize(
    "command",
    [
        ["lattice"],
        ["table"],
        ["verify-gross"],
        ["beta-rank"],
        ["find-twist"],
        ["validate-twist", "{cert}"],
        ["betti", "--kind", "untwisted"],
        ["faces"],
        ["check-core"],
        ["reproduce"],
    ],
    ids=lambda c: c[0],
)
def test_json_payload_carries_meta(command, coset, table_file: Path, tmp_path: Path, capsys) -> None:
    cert = tmp_path / "twist.json"
    cert.write_text(json.dumps({"twist": list(coset.particular.support)}), encoding="utf-8")
    argv = [a.format(cert=cert) for a in command] + ["--table", str(table_file), "--seed", "7", "--json"]

    assert main(argv) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["meta"]["command"] == command[0]
    assert payload["meta"]["seed"] == 7
    assert payload["meta"]["triangulation"] == "default"


def test_reproduce_out_file_has_rows_and_meta(table_file: Path, tmp_path: Path) -> None:
    out = tmp_path / "reproduce.json"
    assert main(["reproduce", "--table", str(table_file), "--out", str(out)]) == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert set(payload) == {"rows", "meta"}
    assert {r["quantity"] for r in payload["rows"]} >= {"rank beta", "sum b(twisted)"}


def test_repeated_twist_id_is_input_error(coset, table_file: Path, tmp_path: Path) -> None:
    support = list(coset.particular.support)
    doubled = tmp_path / "doubled.json"
    doubled.write_text(json.dumps({"twist": support + support[:1]}), encoding="utf-8")
    assert main(["validate-twist", str(doubled), "--table", str(table_file)]) == 2


def test_table_file_with_negative_index_is_input_error(table, tmp_path: Path) -> None:
    payload = table.to_payload()
    payload["triples"] = list(payload["triples"]) + [[0, 0, -1]]
    corrupt = tmp_path / "corrupt.json"
    corrupt.write_text(json.dumps(payload), encoding="utf-8")
    assert main(["beta-rank", "--table", str(corrupt)]) == 2

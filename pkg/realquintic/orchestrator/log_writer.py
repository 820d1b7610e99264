from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional

from realquintic.core.verification import VerificationReport
from realquintic.reporting.artifacts import _to_jsonable


def _utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


class LogWriter:
    """
    JSONL run-event log.

    Creates:
      <log_dir>/<run_id>/events.jsonl

    Each line is {"ts", "event", "meta"}. Stage timings and check outcomes go
    here; stdout is reserved for the command's own output.
    """

    def __init__(self, log_dir: Path, run_id: str) -> None:
        self.log_dir = Path(log_dir)
        self.run_id = str(run_id)

        self.path = self.log_dir / self.run_id
        self.path.mkdir(parents=True, exist_ok=True)

        self.events_path = self.path / "events.jsonl"
        self.events_path.touch(exist_ok=True)

    def event(self, name: str, meta: Optional[Dict[str, Any]] = None) -> None:
        record: Dict[str, Any] = {"ts": _utc_now_iso(), "event": str(name)}
        if meta is not None:
            record["meta"] = _to_jsonable(meta)

        with self.events_path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")

    def checks(self, report: VerificationReport) -> None:
        """One `check` event per named check, failures with their first witnesses."""
        for c in report.checks:
            meta: Dict[str, Any] = {"report": report.title, "check": c.name, "passed": c.passed}
            if not c.passed:
                meta["witnesses"] = list(c.witnesses[:3])
            self.event("check", meta=meta)

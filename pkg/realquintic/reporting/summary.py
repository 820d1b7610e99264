from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Optional

import pandas as pd

from realquintic.types import SummaryRow

STATUSES = ("ok", "MISMATCH", "OPEN")


@dataclass
class SummaryTable:
    """Reference value vs computed value, one row per reproduced quantity."""

    rows: List[SummaryRow] = field(default_factory=list)

    def add(self, quantity: str, reference: Any, computed: Any, status: Optional[str] = None) -> SummaryRow:
        if status is None:
            status = "ok" if reference == computed else "MISMATCH"
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        row: SummaryRow = {"quantity": quantity, "reference": reference, "computed": computed, "status": status}
        self.rows.append(row)
        return row

    @property
    def passed(self) -> bool:
        # OPEN rows document known discrepancies and do not fail the run
        return all(r["status"] != "MISMATCH" for r in self.rows)

    def frame(self) -> pd.DataFrame:
        df = pd.DataFrame(self.rows, columns=["quantity", "reference", "computed", "status"])
        return df.astype({"reference": str, "computed": str})

    def to_text(self) -> str:
        lines = [self.frame().to_string(index=False), f"overall: {'PASS' if self.passed else 'FAIL'}"]
        return "\n".join(lines)

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

# Witness lists are capped so that reports stay readable.
MAX_WITNESSES = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witnesses: tuple[Any, ...] = ()
    stats: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "witnesses": [_plain(w) for w in self.witnesses],
            "stats": {k: _plain(v) for k, v in self.stats.items()},
        }


@dataclass
class VerificationReport:
    """
    Ordered list of named pass/fail checks.

    Verifiers never raise on a failed check; they record it here together
    with up to MAX_WITNESSES offending inputs.
    """

    title: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(
        self,
        name: str,
        passed: bool,
        detail: str = "",
        witnesses: Optional[Sequence[Any]] = None,
        **stats: Any,
    ) -> CheckResult:
        result = CheckResult(
            name=name,
            passed=bool(passed),
            detail=detail,
            witnesses=tuple(list(witnesses or [])[:MAX_WITNESSES]),
            stats=dict(stats),
        )
        self.checks.append(result)
        return result

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(
                CheckResult(
                    name=f"{prefix}{c.name}",
                    passed=c.passed,
                    detail=c.detail,
                    witnesses=c.witnesses,
                    stats=c.stats,
                )
            )
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
            if not c.passed and c.witnesses:
                for w in c.witnesses:
                    lines.append(f"    witness: {_plain(w)}")
        for n in self.notes:
            lines.append(f"note: {n}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _plain(obj: Any) -> Any:
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    if isinstance(obj, Mapping):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
        return [_plain(x) for x in items]
    if hasattr(obj, "item"):
        # numpy scalar
        return obj.item()
    return str(obj)

# realquintic/twist/twist_errors.py
from __future__ import annotations

from typing import Any, Mapping, Optional, Sequence

from realquintic.core.errors import ToolkitError


class TwistError(ToolkitError):
    """Base class for twist-solver and Betti-calculator errors."""


class InputError(TwistError, ValueError):
    """Raised on malformed twist files, unknown divisor ids or calculator preconditions."""


class NoSolutionError(TwistError):
    """Raised when D^2 + D.L = 0 has no solution L for the given table."""

    def __init__(self, diagnostics: Mapping[str, Any]) -> None:
        self.diagnostics = dict(diagnostics)
        super().__init__(f"no (M-2) twist exists for this table: {self.diagnostics}")


class ClassificationError(TwistError):
    """Raised when a divisor pair fits no local case, or more than one."""

    def __init__(self, pair: Sequence[str], cases: Sequence[str], detail: Optional[str] = None) -> None:
        self.pair = tuple(pair)
        self.cases = tuple(cases)
        msg = f"pair {list(self.pair)} matches cases {list(self.cases)}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class TwistVerificationError(TwistError):
    """Raised when a returned twist fails its own post-conditions."""

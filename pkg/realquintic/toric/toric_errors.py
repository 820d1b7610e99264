# realquintic/toric/toric_errors.py
from __future__ import annotations

from typing import Sequence

from realquintic.core.errors import ToolkitError


class IntersectionError(ToolkitError):
    """Base class for toric intersection errors."""


class NotSmoothError(IntersectionError):
    """Raised when no dual vector isolates a repeated ray (non-unimodular cone)."""

    def __init__(self, support: Sequence[str], detail: str = "") -> None:
        self.support = tuple(support)
        msg = f"cannot reduce self-intersection on support {list(self.support)}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class FacetDivisorNonzeroError(IntersectionError):
    """Raised when a facet-interior divisor meets the anticanonical hypersurface."""

    def __init__(self, witness: Sequence[str], value: int) -> None:
        self.witness = tuple(witness)
        self.value = int(value)
        super().__init__(
            f"facet-interior triple {list(self.witness)} has intersection {self.value}, expected 0"
        )

# realquintic/polytope/fan_errors.py
from __future__ import annotations

from typing import Sequence

from realquintic.core.errors import ToolkitError


class FanError(ToolkitError):
    """Base class for polytope, triangulation and fan construction errors."""


class TriangulationError(FanError):
    """Raised when a triangulation breaks unimodularity, counts or face compatibility."""


class SmoothnessError(FanError):
    """Raised when a maximal cone is not generated by a Z^4 basis."""

    def __init__(self, cone: Sequence[str], det: int) -> None:
        self.cone = tuple(cone)
        self.det = int(det)
        super().__init__(f"cone {list(self.cone)} has determinant {self.det}, expected +-1")


class CompletenessError(FanError):
    """Raised when a wall does not lie in exactly two maximal cones."""

    def __init__(self, wall: Sequence[str], count: int) -> None:
        self.wall = tuple(wall)
        self.count = int(count)
        super().__init__(f"wall {list(self.wall)} lies in {self.count} maximal cones, expected 2")

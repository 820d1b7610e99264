# realquintic/gf2/gf2_errors.py
from __future__ import annotations

from realquintic.core.errors import ToolkitError


class GF2Error(ToolkitError):
    """Base class for GF(2) linear algebra errors."""


class DimensionError(GF2Error, ValueError):
    """Raised when operand shapes do not match."""

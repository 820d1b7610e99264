# realquintic/core/errors.py
from __future__ import annotations


class ToolkitError(Exception):
    """Base class for every error raised by realquintic."""

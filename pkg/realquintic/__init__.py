from __future__ import annotations

# ruff: noqa
"""
realquintic package root.

Intentionally avoids importing heavy subpackages on import, to keep
startup cheap and prevent circular-import issues.
"""

__version__ = "0.1.0"

__all__: list[str] = ["__version__"]

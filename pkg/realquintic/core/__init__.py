"""Shared infrastructure: logging, presets, errors, verification reports."""

from __future__ import annotations

import importlib


def test_core_imports_smoke() -> None:
    """
    Fast import smoke test to catch circular imports / missing modules.
    Keep this list focused on "always required" runtime modules.
    """
    modules = [
        "realquintic",
        "realquintic.types",
        "realquintic.core.config",
        "realquintic.core.verification",
        "realquintic.polytope.fan",
        "realquintic.toric.triple_table",
        "realquintic.toric.table_checks",
        "realquintic.gf2.bitmatrix",
        "realquintic.gf2.oracle",
        "realquintic.twist.solver",
        "realquintic.twist.local_cases",
        "realquintic.twist.face_patterns",
        "realquintic.twist.betti",
        "realquintic.finite.checks",
        "realquintic.reporting.svg_face",
        "realquintic.reporting.summary",
        "realquintic.orchestrator.log_writer",
        "realquintic.run.orchestrator",
        "realquintic.run",  # package import (python -m realquintic.run uses __main__.py)
    ]

    failures: list[str] = []
    for mod in modules:
        try:
            importlib.import_module(mod)
        except Exception as e:  # noqa: BLE001
            failures.append(f"{mod}: {type(e).__name__}: {e}")

    assert not failures, "Import failures:\n" + "\n".join(failures)

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from realquintic.core.config import ENV_PRESETS_FILE, load_presets, presets_path
from realquintic.reporting.artifacts import read_json, write_json


def test_packaged_presets() -> None:
    presets = load_presets()
    assert presets.path.name == "presets.yaml"
    assert presets.hodge_names() == ["k3", "mirror-quintic", "quintic"]
    assert dict(presets.hodge("quintic")) == {"h11": 1, "h12": 101}
    assert presets.reference("rank_beta") == 73
    assert presets.reference("twisted_b1.mirror-quintic") == 100
    assert presets.reference("twisted_b1.octic") is None
    assert presets.reference("rank_beta.deeper", default="x") == "x"
    with pytest.raises(KeyError):
        presets.hodge("octic")


def test_env_override(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    path = tmp_path / "presets.yaml"
    path.write_text("hodge:\n  toy:\n    h11: 2\n    h12: 3\nreference:\n  rank_beta: 1\n", encoding="utf-8")
    monkeypatch.setenv(ENV_PRESETS_FILE, str(path))

    assert presets_path() == path
    presets = load_presets()
    assert presets.hodge_names() == ["toy"]
    assert presets.reference("rank_beta") == 1

    # an explicit path wins over the environment
    other = tmp_path / "other.yaml"
    other.write_text("hodge: {}\n", encoding="utf-8")
    assert load_presets(other).path == other


def test_missing_presets_file(tmp_path: Path) -> None:
    with pytest.raises(FileNotFoundError):
        load_presets(tmp_path / "nope.yaml")


def test_empty_presets_file(tmp_path: Path) -> None:
    path = tmp_path / "empty.yaml"
    path.write_text("", encoding="utf-8")
    presets = load_presets(path)
    assert presets.hodge_names() == []
    assert presets.reference("rank_beta") is None


def test_json_artifacts_are_stable(tmp_path: Path) -> None:
    payload = {"b": (1, 2), "rank": np.int64(3), "path": tmp_path, "bits": np.array([1, 0], dtype=np.uint8)}
    out = write_json(tmp_path / "nested" / "out.json", payload)
    text = out.read_text(encoding="utf-8")
    assert text.endswith("\n")
    assert read_json(out) == {"b": [1, 2], "bits": [1, 0], "path": str(tmp_path), "rank": 3}
    write_json(out, payload)
    assert out.read_text(encoding="utf-8") == text

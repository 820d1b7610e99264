from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import yaml

ENV_PRESETS_FILE = "RQ_PRESETS_FILE"

_PACKAGED = Path(__file__).resolve().parents[1] / "config" / "presets.yaml"


def presets_path(override: Optional[Union[str, Path]] = None) -> Path:
    raw = override or os.environ.get(ENV_PRESETS_FILE) or _PACKAGED
    return Path(str(raw)).expanduser()


class Presets:
    """
    Hodge-number presets and published reference values.

    Loaded from realquintic/config/presets.yaml unless a path is given
    explicitly or through $RQ_PRESETS_FILE.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = presets_path(path)
        if not self.path.exists():
            raise FileNotFoundError(f"Missing presets file: {self.path}")

        with open(self.path, "r", encoding="utf-8") as f:
            self.data: Dict[str, Any] = yaml.safe_load(f) or {}

    def hodge(self, name: str) -> Mapping[str, int]:
        table = self.data.get("hodge", {})
        if name not in table:
            raise KeyError(f"unknown Hodge preset: {name!r}")
        return table[name]

    def hodge_names(self) -> list[str]:
        return sorted(self.data.get("hodge", {}))

    def reference(self, key: str, default: Any = None) -> Any:
        node: Any = self.data.get("reference", {})
        for part in key.split("."):
            if not isinstance(node, Mapping) or part not in node:
                return default
            node = node[part]
        return node


def load_presets(path: Optional[Union[str, Path]] = None) -> Presets:
    return Presets(path)

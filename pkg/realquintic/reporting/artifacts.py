from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from pathlib import Path
from typing import Any, Mapping, Union

import numpy as np


def _is_dataclass_instance(obj: Any) -> bool:
    return is_dataclass(obj) and not isinstance(obj, type)


def _to_jsonable(obj: Any) -> Any:
    """Best-effort conversion to something json.dumps can handle."""
    # reports and payload builders
    for attr in ("to_payload", "to_dict"):
        if hasattr(obj, attr) and not isinstance(obj, type):
            return _to_jsonable(getattr(obj, attr)())

    if _is_dataclass_instance(obj):
        return _to_jsonable(asdict(obj))

    if isinstance(obj, np.ndarray):
        return obj.tolist()

    if isinstance(obj, np.generic):
        return obj.item()

    if isinstance(obj, Path):
        return str(obj)

    if isinstance(obj, Mapping):
        return {str(k): _to_jsonable(v) for k, v in obj.items()}

    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(x) for x in obj]

    if isinstance(obj, (set, frozenset)):
        return [_to_jsonable(x) for x in sorted(obj, key=str)]

    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj

    # fallback
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(_to_jsonable(obj), ensure_ascii=False, indent=2, sort_keys=True)


def write_json(path: Union[str, Path], obj: Any) -> Path:
    p = Path(path)
    if p.parent != Path(""):
        p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", encoding="utf-8") as f:
        f.write(dumps(obj))
        f.write("\n")
    return p


def read_json(path: Union[str, Path]) -> Any:
    with Path(path).open("r", encoding="utf-8") as f:
        return json.load(f)

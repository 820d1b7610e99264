"""
realquintic — Shared Payload Contracts
--------------------------------------

JSON payload shapes written and read by the CLI. Contains no logic.

Design notes:
- TypedDict keeps the payloads plain dicts, so json.dump needs no adapters.
- Optional keys are NotRequired so older files still validate.
"""

from __future__ import annotations

from typing import Any, Dict, List, TypedDict

from typing_extensions import NotRequired


class RunMeta(TypedDict):
    """Reproducibility block attached to every CLI payload."""

    command: str
    triangulation: str
    seed: int
    version: str


class PointRecord(TypedDict):
    id: str
    bary: List[int]
    ambient: List[int]
    carrier: List[int]


class LatticeDump(TypedDict):
    points: List[PointRecord]
    cells: List[List[str]]
    meta: NotRequired[RunMeta]


class TablePayload(TypedDict):
    basis: List[str]
    # sorted index triples i <= j <= k with T = 1 mod 2
    triples: List[List[int]]
    provenance: NotRequired[str]
    variant: NotRequired[str]
    # [i, j, k, value] for every nonzero integer value, i <= j <= k
    tz: NotRequired[List[List[int]]]
    meta: NotRequired[RunMeta]


class TwistPayload(TypedDict):
    twist: List[str]
    coset_dim: NotRequired[int]
    rank_untwisted: NotRequired[int]
    verified: NotRequired[bool]
    meta: NotRequired[RunMeta]


class TraceRecord(TypedDict):
    step: str
    value: Any
    citation: str


class BettiPayload(TypedDict):
    kind: str
    preset: str
    h11: int
    h12: int
    rank: int
    components: int
    b: List[int]
    total: int
    total_ambient: int
    classification: str
    trace: List[TraceRecord]
    flags: List[str]
    genus: NotRequired[int]
    reference_b1: NotRequired[int]
    meta: NotRequired[RunMeta]


class SummaryRow(TypedDict):
    quantity: str
    reference: Any
    computed: Any
    status: str


ReportDict = Dict[str, Any]

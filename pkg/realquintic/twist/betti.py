# realquintic/twist/betti.py
"""
Exact-sequence Betti calculators for real Calabi-Yau loci.

Leray dimensions enter as Hodge numbers (valid without 2-torsion):
h11 = dim H^1(B, R^1 f_* Z2), h12 = dim H^1(B, R^2 f_* Z2).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from realquintic.core.config import Presets, load_presets
from realquintic.twist.twist_errors import InputError
from realquintic.types import BettiPayload, TraceRecord

logger = logging.getLogger(__name__)

KINDS = ("untwisted", "twisted", "k3-twisted")

CITE_INPUT = "Leray dimension taken as input (Hodge number, no 2-torsion)"
CITE_RANK = "rank of the squaring pairing on the divisor generators; generators span H^2 and the mod-2 pairing is perfect"
CITE_TWISTED_RANK = (
    "rank of the twisted squaring map Q_L; pre/post-composition with the twisted "
    "sheaf maps (surjective with kernel spanned by the twist, injective since "
    "H^2(B, Z2) = 0) preserves it"
)
CITE_DUALITY = "mod-2 Poincare duality on each closed component"
CITE_TOTAL = "sum of mod-2 Betti numbers of X: 2(h11 + h12) + 4"
CITE_CLASS = "(M-k) classification: sum b = sum b(X) - 2k"


@dataclass(frozen=True)
class HodgeInput:
    h11: int
    h12: int
    preset: str = "custom"

    def __post_init__(self) -> None:
        if self.h11 < 0 or self.h12 < 0:
            raise InputError(f"Hodge numbers must be non-negative, got ({self.h11}, {self.h12})")

    @classmethod
    def from_preset(
        cls,
        name: str,
        presets: Optional[Presets] = None,
        h11: Optional[int] = None,
        h12: Optional[int] = None,
    ) -> "HodgeInput":
        presets = presets or load_presets()
        try:
            base = presets.hodge(name)
        except KeyError as exc:
            raise InputError(str(exc)) from exc
        return cls(
            h11=int(base["h11"]) if h11 is None else int(h11),
            h12=int(base["h12"]) if h12 is None else int(h12),
            preset=name,
        )


@dataclass(frozen=True)
class TraceStep:
    step: str
    value: object
    citation: str

    def to_record(self) -> TraceRecord:
        return {"step": self.step, "value": self.value, "citation": self.citation}


@dataclass
class BettiReport:
    kind: str
    hodge: HodgeInput
    rank: int
    components: int
    b: Tuple[int, ...]
    total_ambient: int
    classification: str = "other"
    trace: List[TraceStep] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)
    genus: Optional[int] = None
    reference_b1: Optional[int] = None

    @property
    def total(self) -> int:
        return sum(self.b)

    @property
    def b1(self) -> int:
        return self.b[1]

    @property
    def bounds_ok(self) -> bool:
        return all(bool(s.value) for s in self.trace if s.step.startswith("bound:"))

    def to_payload(self) -> BettiPayload:
        payload: BettiPayload = {
            "kind": self.kind,
            "preset": self.hodge.preset,
            "h11": self.hodge.h11,
            "h12": self.hodge.h12,
            "rank": self.rank,
            "components": self.components,
            "b": list(self.b),
            "total": self.total,
            "total_ambient": self.total_ambient,
            "classification": self.classification,
            "trace": [s.to_record() for s in self.trace],
            "flags": list(self.flags),
        }
        if self.genus is not None:
            payload["genus"] = self.genus
        if self.reference_b1 is not None:
            payload["reference_b1"] = self.reference_b1
        return payload

    def to_text(self) -> str:
        lines = [
            f"== Betti report: {self.kind} / {self.hodge.preset} "
            f"(h11={self.hodge.h11}, h12={self.hodge.h12}, rank={self.rank}) ==",
            f"components: {self.components}",
            f"b: {list(self.b)}  (sum {self.total} of {self.total_ambient})",
            f"classification: {self.classification}",
        ]
        if self.genus is not None:
            lines.append(f"genus: {self.genus}")
        lines.append("trace:")
        for s in self.trace:
            lines.append(f"  {s.step} = {s.value}    [{s.citation}]")
        for f in self.flags:
            lines.append(f"FLAG {f}")
        return "\n".join(lines)


def classify(total: int, total_ambient: int) -> str:
    deficit = total_ambient - total
    if deficit < 0 or deficit % 2:
        return "other"
    k = deficit // 2
    return {0: "M", 1: "M-1", 2: "M-2"}.get(k, "other")


def _untwisted(h: HodgeInput, rank: int) -> BettiReport:
    if not 0 <= rank <= h.h12:
        raise InputError(f"untwisted rank must lie in 0..h12={h.h12}, got {rank}")
    b1 = h.h11 + h.h12 - rank
    total_x = 2 * (h.h11 + h.h12) + 4
    rep = BettiReport(kind="untwisted", hodge=h, rank=rank, components=2, b=(2, b1, b1, 2), total_ambient=total_x)
    rep.trace += [
        TraceStep("dim H^1(B, R^1 f_* Z2)", h.h11, CITE_INPUT),
        TraceStep("dim H^1(B, R^2 f_* Z2)", h.h12, CITE_INPUT),
        TraceStep("rank beta", rank, CITE_RANK),
        TraceStep("b0", 2, "the untwisted long exact sequence splits; two sheets over H^0"),
        TraceStep("b1", b1, "untwisted sequence: b1 = h11 + h12 - rank beta"),
        TraceStep("b2, b3", [b1, 2], CITE_DUALITY),
        TraceStep("sum b(X)", total_x, CITE_TOTAL),
        TraceStep("bound: b1 <= h11 + h12", b1 <= h.h11 + h.h12, "equality iff rank beta = 0"),
    ]
    return rep


def _twisted(h: HodgeInput, rank: int) -> BettiReport:
    if h.h12 < 1:
        raise InputError("twisted calculator needs h12 >= 1 (the twist spans a line in H^1(B, R^2))")
    if not 0 <= rank <= h.h12 - 1:
        raise InputError(f"twisted rank must lie in 0..h12-1={h.h12 - 1}, got {rank}")
    b1 = h.h11 + (h.h12 - 1) - rank
    total_x = 2 * (h.h11 + h.h12) + 4
    rep = BettiReport(kind="twisted", hodge=h, rank=rank, components=1, b=(1, b1, b1, 1), total_ambient=total_x)
    total = rep.total
    rep.trace += [
        TraceStep("dim H^1(B, R^1 f_* Z2)", h.h11, CITE_INPUT),
        TraceStep("dim H^1(B, R^2 f_* Z2)", h.h12, CITE_INPUT),
        TraceStep(
            "dim of the twisted quotient of H^1(B, R^2 f_* Z2)",
            h.h12 - 1,
            "the map to the twisted sheaf is surjective with kernel generated by the twist",
        ),
        TraceStep("rank beta'", rank, CITE_TWISTED_RANK),
        TraceStep("b0", 1, "a non-trivial twist has a connected real locus"),
        TraceStep("b1", b1, "twisted sequence: b1 = h11 + (h12 - 1) - rank beta'"),
        TraceStep("b2, b3", [b1, 1], CITE_DUALITY),
        TraceStep("sum b(X)", total_x, CITE_TOTAL),
        TraceStep(
            "bound: b1 <= h11 + h12 - 1",
            b1 <= h.h11 + h.h12 - 1,
            "upper bound for connected twisted real loci",
        ),
        TraceStep(
            "bound: sum b <= sum b(X) - 4",
            total <= total_x - 4,
            "twisted real loci are at best (M-2)",
        ),
        TraceStep(
            "bound attained",
            rank == 0,
            "equality holds iff the twisted squaring map vanishes",
        ),
    ]
    return rep


def _k3_twisted(h: HodgeInput, rank: int) -> BettiReport:
    d = h.h11
    if rank != 0:
        raise InputError(f"the K3 calculator models the vanishing twisted squaring map, got rank {rank}")
    if d < 2 or d % 2:
        raise InputError(f"K3 input must be an even number >= 2, got {d}")
    b1 = d - 2
    total_x = d + 4
    rep = BettiReport(
        kind="k3-twisted", hodge=h, rank=rank, components=1, b=(1, b1, 1), total_ambient=total_x, genus=b1 // 2
    )
    rep.trace += [
        TraceStep("dim H^1(B, R^1 f_* Z2)", d, CITE_INPUT),
        TraceStep("b0", 1, "a non-trivial twist has a connected real locus"),
        TraceStep("b1", b1, "two-dimensional twisted sequences: b1 = d - 2"),
        TraceStep("b2", 1, CITE_DUALITY),
        TraceStep("genus", b1 // 2, "closed orientable surface: b1 = 2g"),
        TraceStep("sum b(X)", total_x, "sum of mod-2 Betti numbers of a K3 surface: d + 4"),
        TraceStep("bound: sum b <= sum b(X) - 4", rep.total <= total_x - 4, "twisted real loci are at best (M-2)"),
    ]
    return rep


def betti_report(
    kind: str,
    h: HodgeInput,
    rank: int,
    reference_b1: Optional[int] = None,
) -> BettiReport:
    if kind not in KINDS:
        raise InputError(f"unknown Betti kind {kind!r}; expected one of {KINDS}")
    rank = int(rank)

    if kind == "untwisted":
        rep = _untwisted(h, rank)
    elif kind == "twisted":
        rep = _twisted(h, rank)
    else:
        rep = _k3_twisted(h, rank)

    rep.classification = classify(rep.total, rep.total_ambient)
    rep.trace.append(TraceStep("classification", rep.classification, CITE_CLASS))

    if rep.b[0] != rep.b[-1] or (len(rep.b) == 4 and rep.b[1] != rep.b[2]):
        rep.flags.append("duality violated: b is not palindromic")
    if (rep.total_ambient - rep.total) % 2:
        rep.flags.append("deficit against sum b(X) is odd")

    if reference_b1 is not None:
        rep.reference_b1 = int(reference_b1)
        if rep.reference_b1 != rep.b1:
            rep.flags.append(
                f"OPEN: computed b1 = {rep.b1} from the exact sequences; published value is b1 = {rep.reference_b1}"
            )
            rep.trace.append(
                TraceStep("published b1", rep.reference_b1, "stated value for this preset; discrepancy left open")
            )

    logger.debug("betti_report %s/%s rank=%d -> b=%s", kind, h.preset, rank, rep.b)
    return rep

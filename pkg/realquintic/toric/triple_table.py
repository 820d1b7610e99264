# realquintic/toric/triple_table.py
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from realquintic.polytope.fan import SimplicialFan
from realquintic.polytope.lattice import bary_of, basis_ids
from realquintic.toric.intersection import IntersectionCalculator
from realquintic.toric.toric_errors import FacetDivisorNonzeroError
from realquintic.types import TablePayload

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def common_face(ids: Sequence[str]) -> bool:
    """True iff all points lie in one closed 2-face of P."""
    carrier = set()
    for pid in ids:
        carrier |= {i for i, b in enumerate(bary_of(pid)) if b > 0}
    return len(carrier) <= 3


def _symmetric_fill(arr: np.ndarray, i: int, j: int, k: int, value: int) -> None:
    for p in set(itertools.permutations((i, j, k))):
        arr[p] = value


@dataclass(frozen=True)
class TripleTable:
    """
    Triple intersection numbers T(a,b,c) on the anticanonical hypersurface,
    indexed by the 105 divisors of the V, E and F points.

    t2 holds the mod-2 values (uint8), tz the integer values when kept.
    Both are fully symmetric.
    """

    basis: Tuple[str, ...]
    t2: np.ndarray
    tz: Optional[np.ndarray]
    provenance: str
    variant: str = "default"

    def __post_init__(self) -> None:
        n = len(self.basis)
        if self.t2.shape != (n, n, n):
            raise ValueError(f"t2 has shape {self.t2.shape}, expected {(n, n, n)}")
        self.t2.setflags(write=False)
        if self.tz is not None:
            self.tz.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.basis)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {pid: i for i, pid in enumerate(self.basis)}

    def __call__(self, a: str, b: str, c: str) -> int:
        idx = self.index
        return int(self.t2[idx[a], idx[b], idx[c]])

    def integer(self, a: str, b: str, c: str) -> int:
        if self.tz is None:
            raise ValueError("table was built without integer values")
        idx = self.index
        return int(self.tz[idx[a], idx[b], idx[c]])

    def nonzero_triples(self) -> Iterator[Triple]:
        """Sorted index triples i <= j <= k with T = 1 mod 2."""
        for i, j, k in np.argwhere(self.t2):
            if i <= j <= k:
                yield int(i), int(j), int(k)

    def same_mod2(self, other: "TripleTable") -> bool:
        return self.basis == other.basis and bool(np.array_equal(self.t2, other.t2))

    def to_payload(self, integer: bool = False) -> TablePayload:
        payload: TablePayload = {
            "basis": list(self.basis),
            "triples": [list(t) for t in self.nonzero_triples()],
            "provenance": self.provenance,
            "variant": self.variant,
        }
        if integer and self.tz is not None:
            payload["tz"] = [
                [int(i), int(j), int(k), int(self.tz[i, j, k])]
                for i, j, k in np.argwhere(self.tz)
                if i <= j <= k
            ]
        return payload

    @classmethod
    def from_payload(cls, payload: Dict[str, Any]) -> "TripleTable":
        basis = tuple(str(x) for x in payload["basis"])
        n = len(basis)

        def _checked(*idx: Any) -> Tuple[int, ...]:
            out = tuple(int(x) for x in idx)
            if not all(0 <= x < n for x in out):
                raise ValueError(f"triple {list(out)} indexes outside a basis of {n} generators")
            return out

        t2 = np.zeros((n, n, n), dtype=np.uint8)
        for triple in payload["triples"]:
            _symmetric_fill(t2, *_checked(*triple), 1)
        tz = None
        if "tz" in payload:
            tz = np.zeros((n, n, n), dtype=np.int32)
            for i, j, k, v in payload["tz"]:
                _symmetric_fill(tz, *_checked(i, j, k), int(v))
        return cls(
            basis=basis,
            t2=t2,
            tz=tz,
            provenance=str(payload.get("provenance", "")),
            variant=str(payload.get("variant", "default")),
        )


def _cone_triples(fan: SimplicialFan) -> List[Triple]:
    """Sorted ray multisets of size 3 whose support spans a cone."""
    supports = set()
    for cone in fan.max_cones:
        for r in (1, 2, 3):
            supports.update(itertools.combinations(cone, r))
    out = set()
    for s in supports:
        if len(s) == 1:
            out.add((s[0], s[0], s[0]))
        elif len(s) == 2:
            out.add((s[0], s[0], s[1]))
            out.add((s[0], s[1], s[1]))
        else:
            out.add(s)
    return sorted(out)  # type: ignore[arg-type]


def build_triple_table(
    fan: SimplicialFan,
    calc: Optional[IntersectionCalculator] = None,
    keep_integer: bool = True,
) -> TripleTable:
    calc = calc or IntersectionCalculator(fan)
    basis = basis_ids()
    bidx = {pid: i for i, pid in enumerate(basis)}
    n = len(basis)

    tz = np.zeros((n, n, n), dtype=np.int32)
    computed = 0
    for a, b, c in _cone_triples(fan):
        value = calc.triple(a, b, c)
        computed += 1
        names = [fan.ids[a], fan.ids[b], fan.ids[c]]
        if any(p.startswith("G") for p in names):
            if value != 0:
                raise FacetDivisorNonzeroError(names, value)
            continue
        if value:
            _symmetric_fill(tz, bidx[names[0]], bidx[names[1]], bidx[names[2]], value)

    t2 = np.mod(tz, 2).astype(np.uint8)
    logger.info(
        "triple table (%s): %d cone triples evaluated, %d quad products cached, %d odd entries",
        fan.variant,
        computed,
        calc.cache_size,
        int(t2.sum()),
    )
    return TripleTable(
        basis=basis,
        t2=t2,
        tz=tz if keep_integer else None,
        provenance=fan.fingerprint,
        variant=fan.variant,
    )

# realquintic/polytope/fan.py
from __future__ import annotations

import hashlib
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
import sympy

from realquintic.polytope.fan_errors import CompletenessError, SmoothnessError
from realquintic.polytope.lattice import LatticePoint, enumerate_boundary_points
from realquintic.polytope.triangulation import Triangulation

logger = logging.getLogger(__name__)

Cone = Tuple[int, int, int, int]


@dataclass(frozen=True)
class SimplicialFan:
    """
    Complete smooth fan over a unimodular triangulation of the boundary of P.

    rays[i] is the primitive generator of the i-th boundary point in
    canonical order; max_cones are sorted 4-tuples of ray indices.
    Construct through build_fan, which certifies smoothness and completeness.
    """

    ids: Tuple[str, ...]
    rays: Tuple[Tuple[int, int, int, int], ...]
    max_cones: Tuple[Cone, ...]
    variant: str = "default"

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {pid: i for i, pid in enumerate(self.ids)}

    @cached_property
    def ray_matrix(self) -> np.ndarray:
        return np.asarray(self.rays, dtype=np.int64)

    @cached_property
    def _containing(self) -> Dict[FrozenSet[int], List[int]]:
        """Every face of every maximal cone -> indices of maximal cones containing it."""
        out: Dict[FrozenSet[int], List[int]] = {}
        for ci, cone in enumerate(self.max_cones):
            for r in range(1, 5):
                for sub in itertools.combinations(cone, r):
                    out.setdefault(frozenset(sub), []).append(ci)
        return out

    @cached_property
    def dual_bases(self) -> np.ndarray:
        """
        duals[c, i] is the vector m with <m, u_i> = 1 and <m, u_j> = 0 for the
        other generators u_j of cone c (rows of the inverse transpose).
        """
        out = np.zeros((len(self.max_cones), 4, 4), dtype=np.int64)
        for ci, cone in enumerate(self.max_cones):
            gens = sympy.Matrix([list(self.rays[r]) for r in cone])
            inv = gens.inv()
            for i in range(4):
                out[ci, i] = [int(inv[k, i]) for k in range(4)]
        return out

    @cached_property
    def fingerprint(self) -> str:
        h = hashlib.sha256()
        for cone in self.max_cones:
            h.update(",".join(self.ids[r] for r in cone).encode("utf-8"))
            h.update(b";")
        return h.hexdigest()

    def is_cone(self, rays: Iterable[int]) -> bool:
        key = frozenset(rays)
        return not key or key in self._containing

    def cones_containing(self, rays: Iterable[int]) -> List[int]:
        return list(self._containing.get(frozenset(rays), []))

    def link(self, rays: Iterable[int]) -> Set[int]:
        """Rays w outside the cone such that cone + w is again a cone."""
        key = frozenset(rays)
        star: Set[int] = set()
        for ci in self._containing.get(key, []):
            star.update(self.max_cones[ci])
        return star - key


def cone_determinant(rays: Sequence[Sequence[int]]) -> int:
    return int(sympy.Matrix([list(r) for r in rays]).det())


def build_fan(
    t: Triangulation, points: Optional[Sequence[LatticePoint]] = None
) -> SimplicialFan:
    pts = tuple(points) if points is not None else enumerate_boundary_points()
    ids = tuple(p.id for p in pts)
    idx = {pid: i for i, pid in enumerate(ids)}

    cones = tuple(tuple(sorted(idx[p] for p in cell)) for cell in t.cells)
    fan = SimplicialFan(
        ids=ids,
        rays=tuple(p.ambient for p in pts),
        max_cones=cones,  # type: ignore[arg-type]
        variant=t.variant,
    )

    for cone in fan.max_cones:
        det = cone_determinant([fan.rays[r] for r in cone])
        if abs(det) != 1:
            raise SmoothnessError([ids[r] for r in cone], det)

    walls: Counter[FrozenSet[int]] = Counter()
    for cone in fan.max_cones:
        for wall in itertools.combinations(cone, 3):
            walls[frozenset(wall)] += 1
    for wall, count in sorted(walls.items(), key=lambda kv: sorted(kv[0])):
        if count != 2:
            raise CompletenessError([ids[r] for r in sorted(wall)], count)

    logger.info(
        "fan %s: %d rays, %d maximal cones, %d walls",
        t.variant,
        fan.n_rays,
        len(fan.max_cones),
        len(walls),
    )
    return fan


def cone_query(fan: SimplicialFan, rays: Iterable[int]) -> bool:
    """True iff the ray set is a subset of some maximal cone."""
    rs = list(rays)
    if len(rs) > 4:
        raise ValueError(f"at most 4 rays expected, got {len(rs)}")
    for r in rs:
        if not 0 <= int(r) < fan.n_rays:
            raise IndexError(f"ray index {r} out of range 0..{fan.n_rays - 1}")
    return fan.is_cone(int(r) for r in rs)


def locate(fan: SimplicialFan, x: Sequence[int]) -> Optional[int]:
    """Index of the first maximal cone containing the integer vector x."""
    coeffs = fan.dual_bases @ np.asarray(x, dtype=np.int64)
    hits = np.nonzero((coeffs >= 0).all(axis=1))[0]
    return int(hits[0]) if hits.size else None

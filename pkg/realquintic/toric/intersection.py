# realquintic/toric/intersection.py
"""
Intersection numbers of toric divisors on the smooth complete toric 4-fold.

Products of four distinct divisors are 1 on a maximal cone and 0 elsewhere.
A repeated divisor D_v is traded for a combination of its neighbours via the
linear relation sum_w <m, u_w> D_w = 0, with m the dual vector of v in a
maximal cone containing the support. The recursion depth is at most 3.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Literal, Sequence, Tuple

import numpy as np

from realquintic.polytope.fan import SimplicialFan
from realquintic.toric.toric_errors import NotSmoothError

logger = logging.getLogger(__name__)

ConeChoice = Literal["first", "last"]


class IntersectionCalculator:
    def __init__(self, fan: SimplicialFan, cone_choice: ConeChoice = "first") -> None:
        if cone_choice not in ("first", "last"):
            raise ValueError(f"cone_choice must be 'first' or 'last', got {cone_choice!r}")
        self.fan = fan
        self.cone_choice = cone_choice
        self._memo: Dict[Tuple[int, ...], int] = {}
        self._rays = fan.ray_matrix

    @property
    def cache_size(self) -> int:
        return len(self._memo)

    def quad(self, m: Sequence[int]) -> int:
        key = tuple(sorted(int(x) for x in m))
        if len(key) != 4:
            raise ValueError(f"quad_product needs 4 rays, got {len(key)}")
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        value = self._reduce(key)
        self._memo[key] = value
        return value

    def _reduce(self, key: Tuple[int, ...]) -> int:
        fan = self.fan
        support = sorted(set(key))
        if not fan.is_cone(support):
            return 0
        if len(support) == 4:
            return 1

        v = min(r for r in support if key.count(r) > 1)
        cones = fan.cones_containing(support)
        ci = cones[0] if self.cone_choice == "first" else cones[-1]
        m = fan.dual_bases[ci, fan.max_cones[ci].index(v)]

        if int(m @ self._rays[v]) != 1:
            raise NotSmoothError(
                [fan.ids[r] for r in support], f"<m, {fan.ids[v]}> != 1"
            )
        for w in support:
            if w != v and int(m @ self._rays[w]) != 0:
                raise NotSmoothError(
                    [fan.ids[r] for r in support], f"<m, {fan.ids[w]}> != 0"
                )

        rest: List[int] = list(key)
        rest.remove(v)
        total = 0
        for w in sorted(fan.link(support)):
            coeff = int(m @ self._rays[w])
            if coeff:
                total -= coeff * self.quad(rest + [w])
        return total

    def triple(self, a: int, b: int, c: int) -> int:
        """D_a . D_b . D_c . (sum of all toric divisors), i.e. on the hypersurface."""
        support = {int(a), int(b), int(c)}
        if not self.fan.is_cone(support):
            return 0
        candidates = support | self.fan.link(support)
        return sum(self.quad((a, b, c, w)) for w in sorted(candidates))


def quad_product(fan: SimplicialFan, m: Iterable[int]) -> int:
    return IntersectionCalculator(fan).quad(list(m))


def anticanonical_sum(calc: IntersectionCalculator, triple: Sequence[int]) -> np.ndarray:
    """Per-ray contributions quad(a, b, c, w) for every ray w, in ray order."""
    a, b, c = (int(x) for x in triple)
    return np.array([calc.quad((a, b, c, w)) for w in range(calc.fan.n_rays)], dtype=np.int64)

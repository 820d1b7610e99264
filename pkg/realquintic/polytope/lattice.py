# realquintic/polytope/lattice.py
"""
Boundary lattice points of the simplex P = conv(V0..V4) in Z^4.

P is five times the standard 4-simplex, translated so that its unique
interior lattice point is the origin:

    V0 = (-1,-1,-1,-1), V1 = (4,-1,-1,-1), ..., V4 = (-1,-1,-1,4)

A lattice point is written through its barycentric coordinates b (five
non-negative integers summing to 5); its ambient coordinates are
(b1-1, b2-1, b3-1, b4-1).

Point ids:
    V<i>            vertex i
    E<i><j>:<l>     edge-interior, i<j, b_j = l
    F<i><j><k>:<l>  2-face interior, l indexes the lexicographically
                    decreasing order of (b_i, b_j, b_k)
    G<f>:<l>        facet interior of the facet omitting vertex f
"""

from __future__ import annotations

import itertools
import logging
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

logger = logging.getLogger(__name__)

DEGREE = 5
N_VERTICES = 5

Bary = Tuple[int, int, int, int, int]
Permutation = Tuple[int, int, int, int, int]

VERTICES: Tuple[Tuple[int, int, int, int], ...] = (
    (-1, -1, -1, -1),
    (4, -1, -1, -1),
    (-1, 4, -1, -1),
    (-1, -1, 4, -1),
    (-1, -1, -1, 4),
)


def _positive_compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    """Compositions of `total` into `parts` positive integers, lex-decreasing."""
    out = [
        c
        for c in itertools.product(range(1, total + 1), repeat=parts)
        if sum(c) == total
    ]
    return sorted(out, reverse=True)


_FACE_ORDER = _positive_compositions(DEGREE, 3)  # 6 triples
_FACET_ORDER = _positive_compositions(DEGREE, 4)  # 4 quadruples

_ID_RE = re.compile(r"^(?:V([0-4])|E([0-4])([0-4]):([1-4])|F([0-4])([0-4])([0-4]):([1-6])|G([0-4]):([1-4]))$")


@dataclass(frozen=True)
class LatticePoint:
    id: str
    bary: Bary
    ambient: Tuple[int, int, int, int]
    carrier: Tuple[int, ...]

    @property
    def kind(self) -> str:
        return self.id[0]

    @property
    def on_boundary(self) -> bool:
        return 0 in self.bary

    def permute(self, sigma: Sequence[int]) -> "LatticePoint":
        return lattice_point(permute_bary(self.bary, sigma))


def ambient_of(bary: Sequence[int]) -> Tuple[int, int, int, int]:
    total = [0, 0, 0, 0]
    for b, v in zip(bary, VERTICES):
        for k in range(4):
            total[k] += b * v[k]
    if any(t % DEGREE for t in total):
        raise ValueError(f"non-integral point for barycentric {tuple(bary)}")
    return (
        total[0] // DEGREE,
        total[1] // DEGREE,
        total[2] // DEGREE,
        total[3] // DEGREE,
    )


def point_id(bary: Sequence[int]) -> str:
    b = tuple(int(x) for x in bary)
    if len(b) != N_VERTICES or min(b) < 0 or sum(b) != DEGREE:
        raise ValueError(f"invalid barycentric coordinates: {b}")
    carrier = [i for i in range(N_VERTICES) if b[i] > 0]
    if len(carrier) == 1:
        return f"V{carrier[0]}"
    if len(carrier) == 2:
        i, j = carrier
        return f"E{i}{j}:{b[j]}"
    if len(carrier) == 3:
        i, j, k = carrier
        return f"F{i}{j}{k}:{_FACE_ORDER.index((b[i], b[j], b[k])) + 1}"
    if len(carrier) == 4:
        f = next(i for i in range(N_VERTICES) if b[i] == 0)
        local = tuple(b[i] for i in carrier)
        return f"G{f}:{_FACET_ORDER.index(local) + 1}"
    raise ValueError("the interior point (1,1,1,1,1) carries no divisor id")


def bary_of(pid: str) -> Bary:
    m = _ID_RE.match(pid)
    if m is None:
        raise KeyError(f"malformed point id: {pid!r}")
    g = m.groups()
    b = [0] * N_VERTICES
    if g[0] is not None:
        b[int(g[0])] = DEGREE
    elif g[1] is not None:
        i, j, ell = int(g[1]), int(g[2]), int(g[3])
        if not i < j:
            raise KeyError(f"edge indices must increase: {pid!r}")
        b[i], b[j] = DEGREE - ell, ell
    elif g[4] is not None:
        i, j, k, ell = int(g[4]), int(g[5]), int(g[6]), int(g[7])
        if not i < j < k:
            raise KeyError(f"face indices must increase: {pid!r}")
        b[i], b[j], b[k] = _FACE_ORDER[ell - 1]
    else:
        f, ell = int(g[8]), int(g[9])
        others = [i for i in range(N_VERTICES) if i != f]
        for i, v in zip(others, _FACET_ORDER[ell - 1]):
            b[i] = v
    return (b[0], b[1], b[2], b[3], b[4])


def lattice_point(bary: Sequence[int]) -> LatticePoint:
    b: Bary = tuple(int(x) for x in bary)  # type: ignore[assignment]
    return LatticePoint(
        id=point_id(b),
        bary=b,
        ambient=ambient_of(b),
        carrier=tuple(i for i in range(N_VERTICES) if b[i] > 0),
    )


def permute_bary(bary: Sequence[int], sigma: Sequence[int]) -> Bary:
    """Relabel vertex i as sigma[i]."""
    out = [0] * N_VERTICES
    for i, v in enumerate(bary):
        out[sigma[i]] = v
    return (out[0], out[1], out[2], out[3], out[4])


def permute_id(pid: str, sigma: Sequence[int]) -> str:
    return point_id(permute_bary(bary_of(pid), sigma))


def _kind_rank(p: LatticePoint) -> tuple:
    order = {"V": 0, "E": 1, "F": 2, "G": 3}
    if p.kind == "G":
        head: Tuple[int, ...] = (next(i for i in range(5) if p.bary[i] == 0),)
    else:
        head = p.carrier
    return (order[p.kind], head, int(p.id.split(":")[1]) if ":" in p.id else 0)


@lru_cache(maxsize=1)
def enumerate_boundary_points() -> Tuple[LatticePoint, ...]:
    """
    All 125 boundary lattice points of P in canonical order:
    vertices, then edge-interior, 2-face-interior and facet-interior points.
    """
    pts = [
        lattice_point(b)
        for b in itertools.product(range(DEGREE + 1), repeat=N_VERTICES)
        if sum(b) == DEGREE and 0 in b
    ]
    pts.sort(key=_kind_rank)
    for p in pts:
        if math.gcd(*p.ambient) != 1:
            raise ValueError(f"boundary point {p.id} is not primitive: {p.ambient}")
    logger.debug("enumerated %d boundary lattice points", len(pts))
    return tuple(pts)


@lru_cache(maxsize=1)
def point_index() -> Dict[str, int]:
    return {p.id: i for i, p in enumerate(enumerate_boundary_points())}


def classify_counts(points: Iterable[LatticePoint]) -> Dict[str, int]:
    counts = {"V": 0, "E": 0, "F": 0, "G": 0}
    for p in points:
        counts[p.kind] += 1
    return counts


def basis_ids() -> Tuple[str, ...]:
    """The 105 divisors meeting the hypersurface: V, E and F points."""
    return tuple(p.id for p in enumerate_boundary_points() if p.kind != "G")


def edges() -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(N_VERTICES), 2))


def two_faces() -> List[Tuple[int, int, int]]:
    return list(itertools.combinations(range(N_VERTICES), 3))


def face_label(face: Sequence[int]) -> str:
    return "".join(str(i) for i in sorted(face))


def parse_face(label: str) -> Tuple[int, int, int]:
    if len(label) != 3 or not label.isdigit():
        raise ValueError(f"2-face label must be three vertex digits, got {label!r}")
    face = tuple(int(c) for c in label)
    if not (face[0] < face[1] < face[2] <= 4):
        raise ValueError(f"2-face vertices must increase and lie in 0..4: {label!r}")
    return face  # type: ignore[return-value]


def points_in_face(face: Sequence[int]) -> List[LatticePoint]:
    """Points of the closed 2-face (3 vertices, 12 edge points, 6 interior)."""
    fs = set(face)
    return [p for p in enumerate_boundary_points() if set(p.carrier) <= fs]


def edge_points(i: int, j: int) -> List[str]:
    """V_i, E^1..E^4, V_j along the edge, ordered from V_i (i<j)."""
    return [f"V{i}"] + [f"E{i}{j}:{ell}" for ell in range(1, 5)] + [f"V{j}"]


def all_permutations() -> List[Permutation]:
    return [tuple(p) for p in itertools.permutations(range(N_VERTICES))]  # type: ignore[misc]

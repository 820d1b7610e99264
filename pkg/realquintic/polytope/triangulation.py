# realquintic/polytope/triangulation.py
"""
Unimodular triangulations of the boundary of P.

Each facet is a side-5 tetrahedron. With the facet vertices ordered
(w0, w1, w2, w3) and local barycentric coordinates c, the map

    x1 = c1 + c2 + c3,  x2 = c2 + c3,  x3 = c3

sends the facet onto the region 5 >= x1 >= x2 >= x3 >= 0 of Z^3, which is
a union of Kuhn (Freudenthal) simplices. The resulting 125 cells per facet
restrict to the uniform 25-triangle subdivision on every 2-face, so the
five facet triangulations glue. The vertex order decides which pair of
opposite edges the interior diagonals follow; the alternate variant swaps
w1 and w2, which is a flop away from the 2-skeleton.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

import sympy

from realquintic.polytope.fan_errors import TriangulationError
from realquintic.polytope.lattice import (
    DEGREE,
    N_VERTICES,
    bary_of,
    edges,
    permute_id,
    point_id,
    point_index,
    two_faces,
)

logger = logging.getLogger(__name__)

Cell = Tuple[str, str, str, str]
Triangle = FrozenSet[str]

VARIANTS = ("default", "alternate")

CELLS_PER_FACET = DEGREE**3
TRIANGLES_PER_FACE = DEGREE**2
SEGMENTS_PER_EDGE = DEGREE


def _sort_ids(ids: Sequence[str]) -> Tuple[str, ...]:
    idx = point_index()
    return tuple(sorted(ids, key=idx.__getitem__))


@lru_cache(maxsize=None)
def _carrier(pid: str) -> FrozenSet[int]:
    return frozenset(i for i, b in enumerate(bary_of(pid)) if b > 0)


def facet_vertex_order(omitted: int, variant: str) -> Tuple[int, int, int, int]:
    w = [i for i in range(N_VERTICES) if i != omitted]
    if variant == "default":
        return (w[0], w[1], w[2], w[3])
    if variant == "alternate":
        return (w[0], w[2], w[1], w[3])
    raise ValueError(f"unknown triangulation variant: {variant!r}")


def _staircase_id(x: Sequence[int], order: Sequence[int]) -> str:
    c = (DEGREE - x[0], x[0] - x[1], x[1] - x[2], x[2])
    b = [0] * N_VERTICES
    for vertex, value in zip(order, c):
        b[vertex] = value
    return point_id(b)


def _staircase_cells(order: Sequence[int]) -> List[Cell]:
    cells: List[Cell] = []
    for base in itertools.product(range(DEGREE), repeat=3):
        for perm in itertools.permutations(range(3)):
            x = list(base)
            verts = [tuple(x)]
            for axis in perm:
                x[axis] += 1
                verts.append(tuple(x))
            if all(DEGREE >= v[0] >= v[1] >= v[2] >= 0 for v in verts):
                cells.append(_sort_ids([_staircase_id(v, order) for v in verts]))  # type: ignore[arg-type]
    return sorted(cells, key=lambda c: [point_index()[p] for p in c])


def cell_determinant(cell: Sequence[str], omitted: int) -> int:
    """Determinant of the cell's edge vectors in the facet's affine lattice."""
    coords = [[b for i, b in enumerate(bary_of(p)) if i != omitted] for p in cell]
    rows = [[coords[r][k] - coords[0][k] for k in range(1, 4)] for r in range(1, 4)]
    return int(sympy.Matrix(rows).det())


@dataclass(frozen=True)
class Triangulation:
    variant: str
    facets: Mapping[int, Tuple[Cell, ...]] = field(compare=True)

    @property
    def cells(self) -> Tuple[Cell, ...]:
        return tuple(c for f in sorted(self.facets) for c in self.facets[f])

    @cached_property
    def _face_triangles(self) -> Dict[Tuple[int, int, int], FrozenSet[Triangle]]:
        out: Dict[Tuple[int, int, int], FrozenSet[Triangle]] = {}
        for face in two_faces():
            facet = next(f for f in sorted(self.facets) if f not in face)
            out[face] = self.face_triangles_from(face, facet)
        return out

    def face_triangles_from(self, face: Sequence[int], facet: int) -> FrozenSet[Triangle]:
        fs = frozenset(face)
        tris = set()
        for cell in self.facets[facet]:
            on_face = [p for p in cell if _carrier(p) <= fs]
            if len(on_face) == 3:
                tris.add(frozenset(on_face))
        return frozenset(tris)

    def face_triangles(self, face: Sequence[int]) -> FrozenSet[Triangle]:
        return self._face_triangles[tuple(sorted(face))]  # type: ignore[index]

    @cached_property
    def _edge_segments(self) -> Dict[Tuple[int, int], FrozenSet[FrozenSet[str]]]:
        segs: Dict[Tuple[int, int], set] = {e: set() for e in edges()}
        for cell in self.cells:
            for a, b in itertools.combinations(cell, 2):
                carrier = _carrier(a) | _carrier(b)
                if len(carrier) == 2:
                    segs[tuple(sorted(carrier))].add(frozenset((a, b)))  # type: ignore[index]
        return {e: frozenset(s) for e, s in segs.items()}

    def edge_segments(self, i: int, j: int) -> FrozenSet[FrozenSet[str]]:
        return self._edge_segments[(min(i, j), max(i, j))]

    def face_neighbors(self, face: Sequence[int], pid: str) -> List[str]:
        nbrs: set[str] = set()
        for tri in self.face_triangles(face):
            if pid in tri:
                nbrs |= tri
        nbrs.discard(pid)
        return list(_sort_ids(list(nbrs)))

    def opposite_apexes(self, face: Sequence[int], a: str, b: str) -> List[str]:
        """Third vertices of the face triangles containing the segment ab."""
        out = []
        for tri in self.face_triangles(face):
            if a in tri and b in tri:
                out.extend(p for p in tri if p not in (a, b))
        return list(_sort_ids(out))

    def permuted(self, sigma: Sequence[int]) -> "Triangulation":
        facets = {
            sigma[f]: tuple(
                sorted(
                    (_sort_ids([permute_id(p, sigma) for p in cell]) for cell in cells),  # type: ignore[misc]
                    key=lambda c: [point_index()[p] for p in c],
                )
            )
            for f, cells in self.facets.items()
        }
        return Triangulation(variant=f"{self.variant}|perm", facets=dict(sorted(facets.items())))  # type: ignore[arg-type]

    def validate(self) -> "Triangulation":
        if sorted(self.facets) != list(range(N_VERTICES)):
            raise TriangulationError(f"expected facets 0..4, got {sorted(self.facets)}")

        for f, cells in self.facets.items():
            if len(cells) != CELLS_PER_FACET:
                raise TriangulationError(f"facet {f}: {len(cells)} cells, expected {CELLS_PER_FACET}")
            for cell in cells:
                if any(bary_of(p)[f] != 0 for p in cell):
                    raise TriangulationError(f"facet {f}: cell {list(cell)} leaves the facet")
                det = cell_determinant(cell, f)
                if abs(det) != 1:
                    raise TriangulationError(f"facet {f}: cell {list(cell)} has volume {det}")

        for face in two_faces():
            a, b = [f for f in range(N_VERTICES) if f not in face]
            ta = self.face_triangles_from(face, a)
            tb = self.face_triangles_from(face, b)
            if ta != tb:
                raise TriangulationError(f"2-face {face}: facets {a} and {b} disagree")
            if len(ta) != TRIANGLES_PER_FACE:
                raise TriangulationError(f"2-face {face}: {len(ta)} triangles, expected {TRIANGLES_PER_FACE}")

        for i, j in edges():
            n = len(self.edge_segments(i, j))
            if n != SEGMENTS_PER_EDGE:
                raise TriangulationError(f"edge {(i, j)}: {n} segments, expected {SEGMENTS_PER_EDGE}")

        logger.debug("triangulation %s validated", self.variant)
        return self


def _build(variant: str) -> Triangulation:
    facets = {
        f: tuple(_staircase_cells(facet_vertex_order(f, variant)))
        for f in range(N_VERTICES)
    }
    return Triangulation(variant=variant, facets=facets).validate()


@lru_cache(maxsize=None)
def standard_triangulation() -> Triangulation:
    return _build("default")


@lru_cache(maxsize=None)
def alternate_triangulation() -> Triangulation:
    return _build("alternate")


def triangulation_for(variant: str) -> Triangulation:
    if variant == "default":
        return standard_triangulation()
    if variant == "alternate":
        return alternate_triangulation()
    raise ValueError(f"unknown triangulation variant: {variant!r}")

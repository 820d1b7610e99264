from __future__ import annotations

from collections import Counter

import numpy as np
import pytest

from realquintic.polytope.fan import build_fan, cone_query, locate
from realquintic.polytope.fan_errors import CompletenessError, SmoothnessError, TriangulationError
from realquintic.polytope.lattice import (
    ambient_of,
    bary_of,
    basis_ids,
    classify_counts,
    edge_points,
    enumerate_boundary_points,
    parse_face,
    permute_id,
    point_id,
    points_in_face,
    two_faces,
)
from realquintic.polytope.triangulation import (
    Triangulation,
    alternate_triangulation,
    facet_vertex_order,
    triangulation_for,
)


def test_boundary_point_counts_and_order() -> None:
    pts = enumerate_boundary_points()
    assert len(pts) == 125
    assert classify_counts(pts) == {"V": 5, "E": 40, "F": 60, "G": 20}

    kinds = [p.kind for p in pts]
    assert kinds == sorted(kinds, key="VEFG".index)
    assert pts[0].id == "V0"
    assert pts[0].ambient == (-1, -1, -1, -1)

    basis = basis_ids()
    assert len(basis) == 105
    assert all(not pid.startswith("G") for pid in basis)


def test_ids_round_trip_and_reject_garbage() -> None:
    for p in enumerate_boundary_points():
        assert point_id(bary_of(p.id)) == p.id
        assert ambient_of(p.bary) == p.ambient

    for bad in ("X1", "E10:1", "F021:1", "V5", "E01:5", ""):
        with pytest.raises(KeyError):
            bary_of(bad)

    with pytest.raises(ValueError):
        point_id((1, 1, 1, 1, 1))


def test_faces_and_edges() -> None:
    for face in two_faces():
        pts = points_in_face(face)
        assert len(pts) == 21
        assert Counter(p.kind for p in pts) == {"V": 3, "E": 12, "F": 6}

    assert edge_points(1, 3) == ["V1", "E13:1", "E13:2", "E13:3", "E13:4", "V3"]
    assert parse_face("024") == (0, 2, 4)
    with pytest.raises(ValueError):
        parse_face("420")


def test_permutation_acts_on_ids() -> None:
    sigma = (1, 0, 2, 3, 4)
    assert permute_id("V0", sigma) == "V1"
    # (4,1) on edge 01 becomes (1,4)
    assert permute_id("E01:1", sigma) == "E01:4"
    ids = {p.id for p in enumerate_boundary_points()}
    assert {permute_id(p, sigma) for p in ids} == ids


@pytest.mark.parametrize("variant", ["default", "alternate"])
def test_triangulation_counts(variant: str) -> None:
    t = triangulation_for(variant).validate()
    assert len(t.cells) == 625
    for face in two_faces():
        assert len(t.face_triangles(face)) == 25
    assert len(t.edge_segments(0, 4)) == 5

    interior = "F012:2"
    assert len(t.face_neighbors((0, 1, 2), interior)) == 6


def test_alternate_order_swaps_middle_vertices() -> None:
    assert facet_vertex_order(0, "default") == (1, 2, 3, 4)
    assert facet_vertex_order(0, "alternate") == (1, 3, 2, 4)
    with pytest.raises(ValueError):
        facet_vertex_order(0, "other")


def test_variants_agree_on_two_skeleton(triangulation: Triangulation) -> None:
    alt = alternate_triangulation()
    assert triangulation.cells != alt.cells
    for face in two_faces():
        assert triangulation.face_triangles(face) == alt.face_triangles(face)


def test_permuted_triangulation_is_valid(triangulation: Triangulation) -> None:
    sigma = (2, 0, 1, 4, 3)
    assert triangulation.permuted(sigma).validate().variant.endswith("|perm")


def test_broken_triangulation_is_rejected(triangulation: Triangulation) -> None:
    facets = dict(triangulation.facets)
    facets[0] = facets[0][:-1]
    with pytest.raises(TriangulationError):
        Triangulation(variant="broken", facets=facets).validate()


def test_fan_is_complete_and_smooth(fan) -> None:
    assert fan.n_rays == 125
    assert len(fan.max_cones) == 625

    walls = Counter()
    for cone in fan.max_cones:
        for k in range(4):
            walls[tuple(r for i, r in enumerate(cone) if i != k)] += 1
    assert set(walls.values()) == {2}

    for ci, cone in enumerate(fan.max_cones):
        gens = np.array([fan.rays[r] for r in cone], dtype=np.int64)
        # duals[c, i] pairs to 1 with generator i and to 0 with the others
        assert np.array_equal(gens @ fan.dual_bases[ci].T, np.eye(4, dtype=np.int64))


def test_fan_rejects_missing_cells(triangulation: Triangulation) -> None:
    facets = dict(triangulation.facets)
    facets[2] = facets[2][1:]
    with pytest.raises(CompletenessError):
        build_fan(Triangulation(variant="holes", facets=facets))


def test_fan_rejects_non_unimodular_cone(triangulation: Triangulation) -> None:
    facets = dict(triangulation.facets)
    # V1..V4 span the whole facet opposite V0, a cone of volume 125
    facets[0] = (("V1", "V2", "V3", "V4"),) + facets[0][1:]
    with pytest.raises(SmoothnessError):
        build_fan(Triangulation(variant="fat", facets=facets))


def test_cone_query_and_locate(fan) -> None:
    cone = fan.max_cones[17]
    assert cone_query(fan, cone)
    assert cone_query(fan, cone[:2])
    assert cone_query(fan, [])

    with pytest.raises(ValueError):
        cone_query(fan, [0, 1, 2, 3, 4])
    with pytest.raises(IndexError):
        cone_query(fan, [0, 999])

    # V0 and V1 are not joined by a segment of the triangulation
    assert not cone_query(fan, [fan.index["V0"], fan.index["V1"]])

    x = np.sum([fan.rays[r] for r in cone], axis=0)
    hit = locate(fan, x)
    assert hit is not None
    assert set(fan.max_cones[hit]) == set(cone)
    assert locate(fan, (0, 0, 0, 0)) is not None


def test_random_vectors_land_in_a_cone(fan) -> None:
    rng = np.random.default_rng(2024)
    for x in rng.integers(-30, 31, size=(2000, 4)):
        hit = locate(fan, x)
        assert hit is not None, x.tolist()
        coeffs = fan.dual_bases[hit] @ x
        assert (coeffs >= 0).all()
        gens = np.array([fan.rays[r] for r in fan.max_cones[hit]], dtype=np.int64)
        assert np.array_equal(gens.T @ coeffs, x)

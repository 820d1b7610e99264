from __future__ import annotations

from realquintic.polytope.lattice import all_permutations, permute_id, points_in_face
from realquintic.twist.face_patterns import canonical_pattern, face_patterns, minimize_patterns
from realquintic.twist.pairings import TwistClass
from realquintic.twist.solver import TwistCoset


def test_zero_twist_has_empty_faces(table) -> None:
    report = face_patterns(TwistClass.zero(table.basis))
    assert len(report.faces) == 10
    assert all(fp.label == "empty" for fp in report.faces)
    assert report.n_classes == 1
    assert report.multiplicities == [10]
    assert report.all_edges_empty
    assert len(report.edges_empty) == 10


def test_particular_twist_patterns(coset: TwistCoset) -> None:
    twist = coset.particular
    report = face_patterns(twist)
    assert len(report.faces) == 10
    assert sum(report.multiplicities) == 10
    assert 1 <= report.n_classes <= 10

    on_faces = {p for fp in report.faces for p in fp.points}
    assert on_faces <= set(twist.support)

    frame = report.frame()
    assert list(frame.columns) == ["face", "label", "l_points", "class", "support"]
    assert len(frame) == 10
    payload = report.to_dict()
    assert payload["n_classes"] == report.n_classes
    assert "pattern classes" in report.to_text()


def test_canonical_pattern_is_symmetric() -> None:
    face = (0, 1, 2)
    ids = [p.id for p in points_in_face(face)][:4]
    base = canonical_pattern(face, ids)
    for sigma in [(1, 0, 2, 3, 4), (2, 1, 0, 3, 4), (1, 2, 0, 3, 4)]:
        moved = [permute_id(p, sigma) for p in ids]
        assert canonical_pattern(face, moved) == base
    assert canonical_pattern(face, []) == ()


def test_edge_points_mark_edges(table) -> None:
    report = face_patterns(TwistClass.from_ids(table.basis, ["E01:2"]))
    assert not report.edges_empty["01"]
    assert sum(report.edges_empty.values()) == 9
    labels = {fp.face: fp.label for fp in report.faces}
    assert labels["012"] == "decorated"
    assert labels["234"] == "empty"


def test_minimize_stays_in_coset(coset: TwistCoset) -> None:
    small = TwistCoset(
        particular=coset.particular,
        kernel=coset.kernel[:4],
        rank_m=coset.rank_m,
        rank_untwisted=coset.rank_untwisted,
    )
    best, report = minimize_patterns(small)
    assert small.contains(best)
    assert report.n_classes <= face_patterns(small.particular).n_classes
    again, _ = minimize_patterns(small)
    assert again == best


def test_relabeled_twist_keeps_the_class_multiset(coset: TwistCoset) -> None:
    twist = coset.particular
    base = face_patterns(twist).class_multiset()
    assert sum(base.values()) == 10
    for sigma in all_permutations():
        assert face_patterns(twist.permute(sigma)).class_multiset() == base, sigma

from __future__ import annotations

import pytest

from realquintic.finite.affine_space import (
    Z2Space,
    affine_decompose,
    anf,
    degree,
    delta_characterization,
    is_affine_pointwise,
    is_affine_subspace,
)
from realquintic.finite.checks import (
    EXPECTED_CASE_COUNTS,
    beta_identity_check,
    check_l2_structure,
    classify_tuple,
    filtration_check,
)
from realquintic.gf2.gf2_errors import DimensionError


def test_polynomial_degree() -> None:
    space = Z2Space(3)
    assert degree(space.constant(0)) == -1
    assert degree(space.constant(1)) == 0
    assert degree(space.coordinate(2)) == 1
    assert degree(space.monomial(0b011)) == 2
    assert degree(space.delta([5])) == 3
    assert anf(space.monomial(0b101)).tolist() == [0, 0, 0, 0, 0, 1, 0, 0]


def test_affine_forms() -> None:
    space = Z2Space(3)
    f = space.coordinate(0) + space.coordinate(2) + space.constant(1)
    form = affine_decompose(f)
    assert form is not None
    assert form.linear == (1, 0, 1) and form.constant == 1
    assert is_affine_pointwise(f)
    assert affine_decompose(space.monomial(0b110)) is None
    assert not is_affine_pointwise(space.monomial(0b110))


def test_translation_and_lines() -> None:
    space = Z2Space(3)
    f = space.delta([1, 6])
    assert space.translate(f, 1).support == [0, 7]
    assert space.line(3, 0) == []
    assert sorted(space.line(3, 4)) == [3, 7]
    # repeated points cancel
    assert space.delta([2, 2]).is_zero()


def test_delta_characterization() -> None:
    space = Z2Space(3)
    assert delta_characterization(space.constant(0))
    assert delta_characterization(space.constant(1))
    assert delta_characterization(space.coordinate(1))
    assert delta_characterization(space.coordinate(1) + space.constant(1))
    assert not delta_characterization(space.delta([0]))
    assert not delta_characterization(space.delta([0, 1, 2, 4]))
    assert is_affine_subspace([1, 3, 5, 7])
    assert not is_affine_subspace([])


@pytest.mark.parametrize(
    "key,case",
    [
        ((0, 1, 2, 3), 1),
        ((3, 3, 1, 0), 1),
        ((1, 2, 0, 0), 2),
        ((1, 2, 2, 1), 2),
        ((1, 2, 2, 0), 3),
        ((1, 2, 4, 0), 4),
    ],
)
def test_classify_tuple(key: tuple, case: int) -> None:
    assert classify_tuple(*key) == case


def test_l2_structure() -> None:
    report = check_l2_structure(3)
    assert report.passed, report.to_text()
    names = [c.name for c in report.checks]
    assert "line_class_injective" in names
    assert "n2.dimension" in names


def test_filtration_dims() -> None:
    report = filtration_check(3)
    assert report.passed, report.to_text()
    assert list(report.get("cumulative_dims").stats["dims"]) == [1, 4, 7, 8]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_filtration_passes(n: int) -> None:
    assert filtration_check(n).passed


def test_beta_identity() -> None:
    report = beta_identity_check(seed=0)
    assert report.passed, report.to_text()
    assert report.get("linear_part_identity").stats["agreeing"] == 4096
    counts = report.get("case_breakdown").stats["counts"]
    assert counts == {str(k): v for k, v in EXPECTED_CASE_COUNTS.items()}
    assert sum(counts.values()) == 4096


def test_unsupported_dimensions() -> None:
    with pytest.raises(DimensionError):
        check_l2_structure(2)
    with pytest.raises(DimensionError):
        filtration_check(5)
    with pytest.raises(ValueError):
        Z2Space(0)

from __future__ import annotations

import pytest

from realquintic.core.config import load_presets
from realquintic.twist.betti import HodgeInput, betti_report, classify
from realquintic.twist.twist_errors import InputError


@pytest.fixture(scope="module")
def presets():
    return load_presets()


def test_untwisted_quintic(presets) -> None:
    rep = betti_report("untwisted", HodgeInput.from_preset("quintic", presets), 73)
    assert rep.b == (2, 29, 29, 2)
    assert rep.components == 2
    assert rep.bounds_ok
    assert not rep.flags


def test_twisted_quintic_is_m_minus_two(presets) -> None:
    rep = betti_report("twisted", HodgeInput.from_preset("quintic", presets), 0, reference_b1=101)
    assert rep.b == (1, 101, 101, 1)
    assert rep.total == 204
    assert rep.total_ambient == 208
    assert rep.classification == "M-2"
    assert rep.bounds_ok
    assert rep.flags == []

    steps = [s.step for s in rep.trace]
    assert "b1" in steps and "classification" in steps
    assert all(s.citation for s in rep.trace)


def test_twisted_mirror_quintic_is_flagged_open(presets) -> None:
    rep = betti_report(
        "twisted",
        HodgeInput.from_preset("mirror-quintic", presets),
        0,
        reference_b1=presets.reference("twisted_b1.mirror-quintic"),
    )
    assert rep.b1 == 101
    assert rep.reference_b1 == 100
    assert any(f.startswith("OPEN") for f in rep.flags)
    assert rep.to_payload()["reference_b1"] == 100
    assert "FLAG OPEN" in rep.to_text()


def test_k3_twisted(presets) -> None:
    rep = betti_report("k3-twisted", HodgeInput.from_preset("k3", presets), 0)
    assert rep.b == (1, 18, 1)
    assert rep.genus == 9
    assert rep.classification == "M-2"
    assert rep.to_payload()["genus"] == 9


def test_twisted_formula_over_admissible_ranks() -> None:
    h = HodgeInput(h11=3, h12=7)
    for r in range(0, 7):
        rep = betti_report("twisted", h, r)
        assert rep.b1 == h.h11 + h.h12 - 1 - r
        assert rep.bounds_ok


@pytest.mark.parametrize(
    "kind,h,rank",
    [
        ("untwisted", HodgeInput(1, 101), 102),
        ("untwisted", HodgeInput(1, 101), -1),
        ("twisted", HodgeInput(1, 101), 101),
        ("twisted", HodgeInput(5, 0), 0),
        ("k3-twisted", HodgeInput(20, 0), 1),
        ("k3-twisted", HodgeInput(19, 0), 0),
        ("quartic", HodgeInput(1, 1), 0),
    ],
)
def test_inadmissible_inputs(kind: str, h: HodgeInput, rank: int) -> None:
    with pytest.raises(InputError):
        betti_report(kind, h, rank)


def test_hodge_input_validation(presets) -> None:
    with pytest.raises(InputError):
        HodgeInput(-1, 3)
    with pytest.raises(InputError):
        HodgeInput.from_preset("octic", presets)
    h = HodgeInput.from_preset("quintic", presets, h12=50)
    assert (h.h11, h.h12, h.preset) == (1, 50, "quintic")


@pytest.mark.parametrize(
    "total,ambient,expected",
    [(208, 208, "M"), (206, 208, "M-1"), (204, 208, "M-2"), (202, 208, "other"), (205, 208, "other"), (210, 208, "other")],
)
def test_classify(total: int, ambient: int, expected: str) -> None:
    assert classify(total, ambient) == expected

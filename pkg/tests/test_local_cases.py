from __future__ import annotations

import numpy as np
import pytest

from realquintic.toric.table_checks import EXPECTED_S_SIZE
from realquintic.toric.triple_table import TripleTable
from realquintic.twist.local_cases import CASES, LocalSystem, classify_pair, local_validate
from realquintic.twist.pairings import TwistClass, twisted_rank
from realquintic.twist.twist_errors import ClassificationError, InputError


def test_particular_twist_passes_every_case(table, triangulation, coset, local_system: LocalSystem) -> None:
    report = local_validate(table, triangulation, coset.particular, local_system)
    assert report.passed, report.to_text()
    assert report.consistent, report.to_text()
    assert report.total_failures == 0
    assert report.to_text().endswith("overall: PASS")
    assert set(report.to_dict()["counts"]) == set(CASES)


def test_system_agrees_with_table(local_system: LocalSystem, table) -> None:
    assert local_system.consistent, local_system.mismatches[:5]
    assert len(local_system.equations) == table.size * (table.size + 1) // 2
    assert local_system.matrix.shape == (len(local_system.equations), 105)

    seen = {eq.case for eq in local_system.equations}
    assert seen == set(CASES)


def test_case_shapes(local_system: LocalSystem) -> None:
    for eq in local_system.equations:
        if eq.case == "1.1":
            assert len(eq.support) == 4 and eq.parity == 1
        elif eq.case == "1.3":
            assert len(eq.support) == 6 and eq.parity == 0
        elif eq.case == "2.1":
            assert len(eq.support) == EXPECTED_S_SIZE[eq.pair[0][0]] and eq.parity == 1
        elif eq.case == "2.2":
            assert len(eq.support) == 5 and eq.parity == 1
            assert eq.support[:2] == eq.pair
        elif eq.case == "2.3":
            assert len(eq.support) in (0, 3) and eq.parity == 0
        elif eq.case in ("none", "1.2"):
            assert eq.support == () and eq.parity == 0


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ("F012:1", "F012:6", ("1.2",)),
        ("V0", "F123:1", ("none",)),
        ("V0", "E01:1", ("2.2",)),
        ("E01:1", "E02:1", ("1.1",)),
        ("F012:2", "F012:2", ("1.3",)),
        ("V3", "V3", ("2.1",)),
        ("E24:2", "E24:2", ("2.1",)),
    ],
)
def test_classify_known_pairs(table, triangulation, a: str, b: str, expected: tuple) -> None:
    assert classify_pair(table, triangulation, a, b).case in expected


def test_asymmetric_co_edge_pair_is_rejected(table: TripleTable, triangulation) -> None:
    i, j = table.index["V0"], table.index["E01:1"]
    t2 = table.t2.copy()
    for p in {(i, i, j), (i, j, i), (j, i, i)}:
        t2[p] ^= 1
    broken = TripleTable(basis=table.basis, t2=t2, tz=None, provenance="test")

    with pytest.raises(ClassificationError) as exc:
        classify_pair(broken, triangulation, "V0", "E01:1")
    assert exc.value.pair == ("V0", "E01:1")


def test_local_cases_match_twisted_rank(table, triangulation, pairings, coset, local_system) -> None:
    rng = np.random.default_rng(2)
    twists = [TwistClass.zero(table.basis)]
    twists += [TwistClass.from_bits(table.basis, rng.integers(0, 2, size=105)) for _ in range(6)]
    twists += [coset.random_member(rng) for _ in range(6)]
    for twist in twists:
        report = local_validate(table, triangulation, twist, local_system)
        assert report.passed == (twisted_rank(pairings, twist) == 0)


def test_zero_twist_fails_with_witnesses(table, triangulation, local_system) -> None:
    report = local_validate(table, triangulation, TwistClass.zero(table.basis), local_system)
    assert not report.passed
    # every equation with right-hand side 1 fails, and no other
    assert report.counts["2.1"] == {"pass": 0, "fail": 45}
    assert report.witnesses["2.1"][:5] == [(f"V{i}", f"V{i}") for i in range(5)]
    assert report.counts["1.1"]["pass"] == 0 and report.counts["1.1"]["fail"] > 0
    assert report.counts["2.2"]["pass"] == 0 and report.counts["2.2"]["fail"] > 0
    for case in ("none", "1.2", "1.3", "2.3"):
        assert report.counts[case]["fail"] == 0
    assert report.counts["1.2"]["fail"] == 0


def test_basis_mismatch_is_an_input_error(table, triangulation, local_system) -> None:
    with pytest.raises(InputError):
        local_validate(table, triangulation, TwistClass.zero(table.basis[:-1]), local_system)

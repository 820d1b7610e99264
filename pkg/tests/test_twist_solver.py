from __future__ import annotations

import numpy as np
import pytest

from realquintic.twist.pairings import PairingMatrices, TwistClass, twisted_rank, untwisted_rank
from realquintic.twist.solver import TwistCoset, verify_twist
from realquintic.twist.twist_errors import InputError


def test_untwisted_rank(pairings: PairingMatrices) -> None:
    assert pairings.q.shape == (105, 105)
    assert np.array_equal(pairings.q, pairings.q.T)
    assert untwisted_rank(pairings) == 73
    assert twisted_rank(pairings, TwistClass.zero(pairings.basis)) == 73


def test_particular_twist_kills_the_pairing(table, pairings: PairingMatrices, coset: TwistCoset) -> None:
    twist = coset.particular
    assert not twist.is_zero
    assert verify_twist(pairings, twist)
    assert twisted_rank(pairings, twist) == 0
    assert twist.is_nontrivial(table)

    a, b = twist.cohomology_witness(table)
    assert int(twist.pairing(table)[table.index[a], table.index[b]]) == 1

    assert coset.rank_untwisted == 73
    assert coset.rank_m + coset.dim == 105


def test_coset_membership(pairings: PairingMatrices, coset: TwistCoset) -> None:
    rng = np.random.default_rng(5)
    for _ in range(10):
        member = coset.random_member(rng)
        assert coset.contains(member)
        assert verify_twist(pairings, member)

    # the coset is exactly the solution set
    outsider = coset.particular + TwistClass.from_ids(pairings.basis, ["V0"])
    assert coset.contains(outsider) == verify_twist(pairings, outsider)

    assert not verify_twist(pairings, TwistClass.zero(pairings.basis))
    assert not coset.contains(TwistClass.zero(pairings.basis))


def test_small_coset_enumeration(coset: TwistCoset) -> None:
    small = TwistCoset(
        particular=coset.particular,
        kernel=coset.kernel[:3],
        rank_m=coset.rank_m,
        rank_untwisted=coset.rank_untwisted,
    )
    members = list(small.members())
    assert len(members) == 2 ** small.dim
    assert members[0] == coset.particular
    assert all(coset.contains(m) for m in members)


def test_twist_class_inputs(pairings: PairingMatrices) -> None:
    basis = pairings.basis
    twist = TwistClass.from_ids(basis, ["V0", "E01:1", "V0"])
    assert twist.support == ("E01:1",)

    with pytest.raises(InputError):
        TwistClass.from_ids(basis, ["G0:1"])
    with pytest.raises(InputError):
        TwistClass.from_ids(basis, ["not-a-divisor"])
    with pytest.raises(InputError):
        TwistClass(basis, np.zeros(3, dtype=np.uint8))
    with pytest.raises(InputError):
        twist + TwistClass.zero(basis[:-1])
    with pytest.raises(InputError):
        pairings.action(TwistClass.zero(basis[:-1]))


def test_permuted_twist_keeps_the_support_size(pairings: PairingMatrices, coset: TwistCoset) -> None:
    moved = coset.particular.permute((1, 0, 2, 3, 4))
    assert len(moved.support) == len(coset.particular.support)
    assert moved.permute((1, 0, 2, 3, 4)) == coset.particular


def test_twisted_pairing_is_affine_in_the_twist(pairings: PairingMatrices) -> None:
    rng = np.random.default_rng(11)
    n = len(pairings.basis)
    q0 = pairings.twisted(TwistClass.zero(pairings.basis))
    assert np.array_equal(q0, pairings.q)
    for _ in range(30):
        l1 = TwistClass.from_bits(pairings.basis, rng.integers(0, 2, size=n))
        l2 = TwistClass.from_bits(pairings.basis, rng.integers(0, 2, size=n))
        total = pairings.twisted(l1 + l2) ^ pairings.twisted(l1) ^ pairings.twisted(l2) ^ q0
        assert not total.any()

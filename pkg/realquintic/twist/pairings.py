# realquintic/twist/pairings.py
"""
Matrix form of the squaring map D -> D^2 + D.L against the 105 generators.

    Q[d1, d2]          = T(d1, d1, d2)                 squaring pairing
    M[(d1, d2), d]     = T(d, d1, d2)                  twist action
    Q_L[d1, d2]        = Q[d1, d2] + sum_d eps_d T(d, d1, d2)

rank Q_L is the rank of the twisted squaring map; L = 0 recovers Q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from realquintic.gf2.bitmatrix import BitMatrix, rank
from realquintic.polytope.lattice import permute_id
from realquintic.toric.triple_table import TripleTable
from realquintic.twist.twist_errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistClass:
    """A twist L = sum_D eps_D D over the generator basis, mod 2."""

    basis: Tuple[str, ...]
    eps: np.ndarray

    def __post_init__(self) -> None:
        if self.eps.shape != (len(self.basis),):
            raise InputError(f"eps has shape {self.eps.shape}, basis has {len(self.basis)} ids")
        self.eps.setflags(write=False)

    @classmethod
    def zero(cls, basis: Sequence[str]) -> "TwistClass":
        return cls(tuple(basis), np.zeros(len(basis), dtype=np.uint8))

    @classmethod
    def from_bits(cls, basis: Sequence[str], bits: Iterable[int]) -> "TwistClass":
        return cls(tuple(basis), (np.asarray(list(bits), dtype=np.int64) & 1).astype(np.uint8))

    @classmethod
    def from_ids(cls, basis: Sequence[str], ids: Iterable[str]) -> "TwistClass":
        index = {pid: i for i, pid in enumerate(basis)}
        eps = np.zeros(len(basis), dtype=np.uint8)
        for pid in ids:
            if pid not in index:
                raise InputError(f"unknown divisor id in twist: {pid!r}")
            eps[index[pid]] ^= 1
        return cls(tuple(basis), eps)

    @property
    def support(self) -> Tuple[str, ...]:
        return tuple(self.basis[i] for i in np.nonzero(self.eps)[0])

    @property
    def is_zero(self) -> bool:
        return not self.eps.any()

    def __add__(self, other: "TwistClass") -> "TwistClass":
        if self.basis != other.basis:
            raise InputError("cannot add twists over different bases")
        return TwistClass(self.basis, self.eps ^ other.eps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistClass):
            return NotImplemented
        return self.basis == other.basis and bool(np.array_equal(self.eps, other.eps))

    def permute(self, sigma: Sequence[int]) -> "TwistClass":
        return TwistClass.from_ids(self.basis, [permute_id(p, sigma) for p in self.support])

    def pairing(self, t: TripleTable) -> np.ndarray:
        """(L . d1 . d2) for all generator pairs."""
        return (np.tensordot(self.eps.astype(np.int64), t.t2.astype(np.int64), axes=1) & 1).astype(np.uint8)

    def cohomology_witness(self, t: TripleTable) -> Optional[Tuple[str, str]]:
        """First pair (D1, D2) with L . D1 . D2 = 1, or None if L pairs trivially."""
        hits = np.argwhere(self.pairing(t))
        if hits.size == 0:
            return None
        i, j = hits[0]
        return self.basis[int(i)], self.basis[int(j)]

    def is_nontrivial(self, t: TripleTable) -> bool:
        return self.cohomology_witness(t) is not None


@dataclass(frozen=True)
class PairingMatrices:
    basis: Tuple[str, ...]
    q: np.ndarray
    t2: np.ndarray

    @cached_property
    def Q(self) -> BitMatrix:
        return BitMatrix.from_dense(self.q)

    @cached_property
    def M(self) -> BitMatrix:
        n = len(self.basis)
        return BitMatrix.from_dense(self.t2.transpose(1, 2, 0).reshape(n * n, n))

    @property
    def q_vector(self) -> np.ndarray:
        return self.q.reshape(-1)

    def action(self, twist: TwistClass) -> np.ndarray:
        """(L . d1 . d2) for all generator pairs."""
        if twist.basis != self.basis:
            raise InputError("twist basis does not match the pairing basis")
        action = np.tensordot(twist.eps.astype(np.int64), self.t2.astype(np.int64), axes=1)
        return (action & 1).astype(np.uint8)

    def twisted(self, twist: TwistClass) -> np.ndarray:
        return self.q ^ self.action(twist)


def build_pairings(t: TripleTable) -> PairingMatrices:
    q = np.ascontiguousarray(np.einsum("iij->ij", t.t2)).astype(np.uint8)
    logger.debug("squaring pairing built over %d generators", t.size)
    return PairingMatrices(basis=t.basis, q=q, t2=t.t2)


def twisted_rank(p: PairingMatrices, twist: TwistClass) -> int:
    return rank(BitMatrix.from_dense(p.twisted(twist)))


def untwisted_rank(p: PairingMatrices) -> int:
    return rank(p.Q)

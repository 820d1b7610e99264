# realquintic/twist/solver.py
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from realquintic.gf2.bitmatrix import BitMatrix, rank, solve_affine
from realquintic.twist.pairings import PairingMatrices, TwistClass, twisted_rank, untwisted_rank
from realquintic.twist.twist_errors import NoSolutionError, TwistVerificationError

logger = logging.getLogger(__name__)

# beyond this coset dimension, members() refuses to enumerate
MAX_ENUMERABLE_DIM = 20


@dataclass(frozen=True)
class TwistCoset:
    """All L with D^2 + D.L = 0 for every generator D: particular + span(kernel)."""

    particular: TwistClass
    kernel: Tuple[TwistClass, ...]
    rank_m: int
    rank_untwisted: int

    @property
    def dim(self) -> int:
        return len(self.kernel)

    def member(self, coeffs: Sequence[int]) -> TwistClass:
        out = self.particular
        for c, k in zip(coeffs, self.kernel):
            if c & 1:
                out = out + k
        return out

    def members(self) -> Iterator[TwistClass]:
        if self.dim > MAX_ENUMERABLE_DIM:
            raise ValueError(f"coset of dimension {self.dim} is too large to enumerate")
        for coeffs in itertools.product((0, 1), repeat=self.dim):
            yield self.member(coeffs)

    def random_member(self, rng: np.random.Generator) -> TwistClass:
        return self.member(rng.integers(0, 2, size=self.dim).tolist())

    def contains(self, twist: TwistClass) -> bool:
        """Membership test: twist - particular lies in span(kernel)."""
        diff = (twist + self.particular).eps
        if not diff.any():
            return True
        if not self.kernel:
            return False
        k = np.stack([v.eps for v in self.kernel])
        return rank(BitMatrix.from_dense(np.vstack([k, diff]))) == rank(BitMatrix.from_dense(k))


def solve_m2_twists(p: PairingMatrices) -> TwistCoset:
    """Solve M . eps = vec(Q) over GF(2) and certify the whole coset."""
    sol = solve_affine(p.M, p.q_vector)
    q_rank = untwisted_rank(p)
    if sol is None:
        raise NoSolutionError(
            {
                "rank_M": rank(p.M),
                "rank_augmented": rank(
                    BitMatrix.from_dense(np.concatenate([p.M.to_dense(), p.q_vector[:, None]], axis=1))
                ),
                "rank_Q": q_rank,
                "equations": p.M.rows,
                "unknowns": p.M.cols,
            }
        )

    basis = p.basis
    coset = TwistCoset(
        particular=TwistClass(basis, sol.particular),
        kernel=tuple(TwistClass(basis, k) for k in sol.kernel),
        rank_m=p.M.cols - sol.dim,
        rank_untwisted=q_rank,
    )

    representatives = [coset.particular] + [coset.particular + k for k in coset.kernel]
    for rep in representatives:
        r = twisted_rank(p, rep)
        if r != 0:
            raise TwistVerificationError(f"coset representative {list(rep.support)} has twisted rank {r}")
        if q_rank and not p.action(rep).any():
            raise TwistVerificationError(f"coset representative {list(rep.support)} pairs trivially with every generator pair")

    logger.info(
        "twist coset: dim %d (rank M = %d), particular support size %d",
        coset.dim,
        coset.rank_m,
        len(coset.particular.support),
    )
    return coset


def verify_twist(p: PairingMatrices, twist: TwistClass) -> bool:
    """Q_L = 0 on every generator pair."""
    return not p.twisted(twist).any()

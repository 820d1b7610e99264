# realquintic/gf2/oracle.py
"""
Independent reference elimination on Python-int bitsets.

Rows are ints with bit c standing for column c. Nothing here shares code
with bitmatrix, so the two can be cross-checked against each other.
"""

from __future__ import annotations

from typing import List, Sequence

import numpy as np

from realquintic.core.verification import VerificationReport
from realquintic.gf2.bitmatrix import BitMatrix, matvec, rank_and_kernel, solve_affine


def to_bitsets(dense: np.ndarray) -> List[int]:
    packed = np.packbits(np.asarray(dense, dtype=np.uint8) & 1, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def naive_rank(rows: Sequence[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return len(pivots)


def naive_solvable(dense: np.ndarray, b: Sequence[int]) -> bool:
    rows = to_bitsets(dense)
    cols = dense.shape[1]
    augmented = [r | ((int(bit) & 1) << cols) for r, bit in zip(rows, b)]
    return naive_rank(rows) == naive_rank(augmented)


def cross_check(instances: int = 1000, max_dim: int = 200, seed: int = 0) -> VerificationReport:
    """rank, kernel and solve of BitMatrix against the bitset elimination."""
    rng = np.random.default_rng(seed)
    report = VerificationReport(title=f"GF(2) core vs bitset oracle ({instances} instances)")
    bad_rank, bad_kernel, bad_solve = [], [], []

    for k in range(instances):
        rows = int(rng.integers(1, max_dim + 1))
        cols = int(rng.integers(1, max_dim + 1))
        density = float(rng.uniform(0.05, 0.6))
        dense = (rng.random((rows, cols)) < density).astype(np.uint8)
        m = BitMatrix.from_dense(dense)

        r, kernel = rank_and_kernel(m)
        if r != naive_rank(to_bitsets(dense)):
            bad_rank.append(k)

        if len(kernel) != cols - r or any(matvec(m, v).any() for v in kernel):
            bad_kernel.append(k)
        elif kernel and naive_rank(to_bitsets(np.stack(kernel))) != len(kernel):
            bad_kernel.append(k)

        if k % 2:
            b = matvec(m, rng.integers(0, 2, size=cols))
        else:
            b = rng.integers(0, 2, size=rows).astype(np.uint8)
        sol = solve_affine(m, b)
        if (sol is not None) != naive_solvable(dense, b):
            bad_solve.append(k)
        elif sol is not None and not np.array_equal(matvec(m, sol.particular), b):
            bad_solve.append(k)

    report.add("rank", not bad_rank, f"{instances - len(bad_rank)}/{instances} ranks agree", witnesses=bad_rank)
    report.add(
        "kernel",
        not bad_kernel,
        f"{instances - len(bad_kernel)}/{instances} kernels are independent, annihilated and of full size",
        witnesses=bad_kernel,
    )
    report.add(
        "solve",
        not bad_solve,
        f"{instances - len(bad_solve)}/{instances} systems agree on solvability and particular solution",
        witnesses=bad_solve,
    )
    return report

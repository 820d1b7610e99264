# realquintic/gf2/bitmatrix.py
"""
Dense GF(2) matrices stored as numpy.packbits rows (big bit order, so
column c lives in byte c >> 3 at bit 7 - (c & 7)).

Elimination is deterministic: columns are scanned left to right and the
topmost available row becomes the pivot. Row additions XOR whole packed
rows at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from realquintic.gf2.gf2_errors import DimensionError


def _as_bits(a: np.ndarray | Sequence) -> np.ndarray:
    arr = np.asarray(a)
    return (arr.astype(np.int64) & 1).astype(np.uint8)


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    bits: np.ndarray

    def __post_init__(self) -> None:
        width = (self.cols + 7) // 8
        if self.bits.dtype != np.uint8 or self.bits.shape != (self.rows, width):
            raise DimensionError(
                f"payload {self.bits.dtype}{self.bits.shape} does not fit a {self.rows}x{self.cols} matrix"
            )
        self.bits.setflags(write=False)

    @classmethod
    def from_dense(cls, a: np.ndarray | Sequence) -> "BitMatrix":
        dense = _as_bits(a)
        if dense.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got shape {dense.shape}")
        rows, cols = dense.shape
        packed = np.packbits(dense, axis=1) if cols else np.zeros((rows, 0), np.uint8)
        return cls(rows=rows, cols=cols, bits=np.ascontiguousarray(packed))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls.from_dense(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    def to_dense(self) -> np.ndarray:
        if self.cols == 0:
            return np.zeros((self.rows, 0), dtype=np.uint8)
        return np.unpackbits(self.bits, axis=1, count=self.cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def get(self, r: int, c: int) -> int:
        return int((self.bits[r, c >> 3] >> (7 - (c & 7))) & 1)

    def row_permuted(self, order: Sequence[int]) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, np.ascontiguousarray(self.bits[list(order)]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.bits, other.bits))


@dataclass(frozen=True)
class AffineSolution:
    """particular + span(kernel): the full solution set of m x = b."""

    particular: np.ndarray
    kernel: Tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.kernel)

    def member(self, coeffs: Sequence[int]) -> np.ndarray:
        x = self.particular.copy()
        for c, k in zip(coeffs, self.kernel):
            if c & 1:
                x ^= k
        return x


def row_reduce(
    m: BitMatrix, pivot_cols: Optional[int] = None
) -> Tuple[BitMatrix, Tuple[int, ...]]:
    """
    Reduced row echelon form and pivot columns.

    Only the first `pivot_cols` columns are eligible as pivots; the rest are
    carried along (augmented systems).
    """
    limit = m.cols if pivot_cols is None else min(pivot_cols, m.cols)
    work = m.bits.copy()
    pivots: List[int] = []
    prow = 0
    for c in range(limit):
        if prow == m.rows:
            break
        byte, mask = c >> 3, np.uint8(1 << (7 - (c & 7)))
        below = np.nonzero(work[prow:, byte] & mask)[0]
        if below.size == 0:
            continue
        p = prow + int(below[0])
        if p != prow:
            work[[prow, p]] = work[[p, prow]]
        hits = np.nonzero(work[:, byte] & mask)[0]
        hits = hits[hits != prow]
        if hits.size:
            work[hits] ^= work[prow]
        pivots.append(c)
        prow += 1
    return BitMatrix(m.rows, m.cols, work), tuple(pivots)


def _kernel_from_rref(rref: np.ndarray, pivots: Sequence[int], cols: int) -> List[np.ndarray]:
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        x = np.zeros(cols, dtype=np.uint8)
        x[f] = 1
        for i, p in enumerate(pivots):
            x[p] = rref[i, f]
        basis.append(x)
    return basis


def rank(m: BitMatrix) -> int:
    return len(row_reduce(m)[1])


def rank_and_kernel(m: BitMatrix) -> Tuple[int, List[np.ndarray]]:
    reduced, pivots = row_reduce(m)
    kernel = _kernel_from_rref(reduced.to_dense(), pivots, m.cols)
    return len(pivots), kernel


def solve_affine(m: BitMatrix, b: np.ndarray | Sequence[int]) -> Optional[AffineSolution]:
    rhs = _as_bits(b).reshape(-1)
    if rhs.shape[0] != m.rows:
        raise DimensionError(f"right-hand side has length {rhs.shape[0]}, matrix has {m.rows} rows")

    aug = np.concatenate([m.to_dense(), rhs[:, None]], axis=1)
    reduced, pivots = row_reduce(BitMatrix.from_dense(aug), pivot_cols=m.cols)
    dense = reduced.to_dense()

    r = len(pivots)
    if dense[r:, m.cols].any():
        return None

    particular = np.zeros(m.cols, dtype=np.uint8)
    for i, p in enumerate(pivots):
        particular[p] = dense[i, m.cols]
    kernel = _kernel_from_rref(dense[:, : m.cols], pivots, m.cols)
    return AffineSolution(particular=particular, kernel=tuple(kernel))


def matvec(m: BitMatrix, x: np.ndarray | Sequence[int]) -> np.ndarray:
    v = _as_bits(x).reshape(-1)
    if v.shape[0] != m.cols:
        raise DimensionError(f"vector has length {v.shape[0]}, matrix has {m.cols} columns")
    return ((m.to_dense().astype(np.int64) @ v.astype(np.int64)) & 1).astype(np.uint8)

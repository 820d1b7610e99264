# realquintic/finite/affine_space.py
"""
Functions on the finite space GF(2)^n.

Points are the integers 0 .. 2^n - 1, coordinate i being bit i. A function
S -> Z2 is an FnTable of 2^n bits. Polynomial (algebraic normal form)
coefficients come from the binary Moebius transform, so the degree of a
function and its affine part are read off exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

SUPPORTED_DIMS = (2, 3, 4)


@dataclass(frozen=True)
class Z2Space:
    n: int
    basepoint: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if not 0 <= self.basepoint < (1 << self.n):
            raise ValueError(f"basepoint {self.basepoint} outside GF(2)^{self.n}")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def points(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def coords(self, x: int) -> Tuple[int, ...]:
        return tuple((x >> i) & 1 for i in range(self.n))

    def delta(self, pts: Iterable[int]) -> "FnTable":
        """delta_W: indicator of W, with repeated points cancelling mod 2."""
        v = np.zeros(self.size, dtype=np.uint8)
        for p in pts:
            v[int(p)] ^= 1
        return FnTable(v)

    def constant(self, c: int) -> "FnTable":
        return FnTable(np.full(self.size, c & 1, dtype=np.uint8))

    def coordinate(self, i: int) -> "FnTable":
        return FnTable(((self.points >> i) & 1).astype(np.uint8))

    def monomial(self, mask: int) -> "FnTable":
        """x^S with S the bit set of `mask`, in coordinates centred at the basepoint."""
        shifted = self.points ^ self.basepoint
        return FnTable(((shifted & mask) == mask).astype(np.uint8))

    def line(self, q: int, v: int) -> List[int]:
        """Z_v through q: {q, q+v}, empty for v = 0."""
        return [] if v == 0 else [q, q ^ v]

    def translate(self, f: "FnTable", c: int) -> "FnTable":
        """(T_c f)(x) = f(x + c)."""
        return FnTable(f.values[self.points ^ c])

    def all_functions(self) -> Iterable["FnTable"]:
        for code in range(1 << self.size):
            yield FnTable(((code >> self.points) & 1).astype(np.uint8))


@dataclass(frozen=True)
class FnTable:
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    def __add__(self, other: "FnTable") -> "FnTable":
        return FnTable(self.values ^ other.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FnTable):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    @property
    def n(self) -> int:
        return int(self.values.size).bit_length() - 1

    @property
    def support(self) -> List[int]:
        return [int(x) for x in np.nonzero(self.values)[0]]

    def is_zero(self) -> bool:
        return not self.values.any()


def anf(f: FnTable) -> np.ndarray:
    """Coefficients a[S] with f = sum_S a[S] x^S (binary Moebius transform)."""
    a = f.values.copy()
    idx = np.arange(a.size)
    for i in range(f.n):
        hi = idx[(idx >> i) & 1 == 1]
        a[hi] ^= a[hi ^ (1 << i)]
    return a


def degree(f: FnTable) -> int:
    """Polynomial degree; -1 for the zero function."""
    coeffs = anf(f)
    nz = np.nonzero(coeffs)[0]
    if nz.size == 0:
        return -1
    return max(bin(int(s)).count("1") for s in nz)


@dataclass(frozen=True)
class AffineForm:
    linear: Tuple[int, ...]
    constant: int


def affine_decompose(f: FnTable) -> Optional[AffineForm]:
    """(linear covector, constant) if deg f <= 1, else None."""
    if degree(f) > 1:
        return None
    coeffs = anf(f)
    return AffineForm(
        linear=tuple(int(coeffs[1 << i]) for i in range(f.n)),
        constant=int(coeffs[0]),
    )


def is_affine_pointwise(f: FnTable) -> bool:
    """f(x) + f(y) + f(z) + f(x+y+z) = 0 for all x, y, z."""
    v = f.values
    n = v.size
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    return not (v[x] ^ v[y] ^ v[z] ^ v[x ^ y ^ z]).any()


def is_affine_subspace(pts: Sequence[int]) -> bool:
    """Nonempty and closed under x + y + z."""
    s = set(int(p) for p in pts)
    if not s:
        return False
    return all((x ^ y ^ z) in s for x in s for y in s for z in s)


def delta_characterization(f: FnTable) -> bool:
    """
    f = delta_W or 1 + delta_W with W empty, everything, or an affine hyperplane;
    equivalently the support of f is one of those.
    """
    supp = f.support
    size = f.values.size
    if len(supp) in (0, size):
        return True
    return len(supp) == size // 2 and is_affine_subspace(supp)

# realquintic/finite/checks.py
"""
Exhaustive checks of the fibrewise Z2 identities.

    check_l2_structure   Maps/Aff on GF(2)^3 and the line classes [delta_Z]
    filtration_check     degree filtration K^0 < K^1 < ... < K^n = Maps
    beta_identity_check  Lin(alpha) = e1^e2 + e1^f1 + e2^f2 over all 4096 tuples
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from math import comb
from typing import Dict, List, Sequence, Tuple

import numpy as np

from realquintic.core.verification import VerificationReport
from realquintic.finite.affine_space import (
    SUPPORTED_DIMS,
    FnTable,
    Z2Space,
    affine_decompose,
    delta_characterization,
)
from realquintic.gf2.bitmatrix import BitMatrix, rank, row_reduce
from realquintic.gf2.gf2_errors import DimensionError

logger = logging.getLogger(__name__)

EXPECTED_CASE_COUNTS = {1: 1408, 2: 336, 3: 336, 4: 2016}


def _rank_of(vectors: Sequence[np.ndarray]) -> int:
    if not vectors:
        return 0
    return rank(BitMatrix.from_dense(np.stack(vectors)))


class QuotientMap:
    """Canonical coset representatives of Maps(S, Z2) modulo a subspace."""

    def __init__(self, generators: Sequence[FnTable]) -> None:
        reduced, pivots = row_reduce(BitMatrix.from_dense(np.stack([g.values for g in generators])))
        self._rows = reduced.to_dense()[: len(pivots)]
        self._pivots = pivots

    @property
    def sub_dim(self) -> int:
        return len(self._pivots)

    def reduce(self, f: FnTable) -> np.ndarray:
        v = f.values.copy()
        for row, p in zip(self._rows, self._pivots):
            if v[p]:
                v ^= row
        return v

    def cls(self, f: FnTable) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.reduce(f))


def affine_basis(space: Z2Space) -> List[FnTable]:
    return [space.constant(1)] + [space.coordinate(i) for i in range(space.n)]


def degree_part(space: Z2Space, p: int) -> List[FnTable]:
    """Monomials of degree <= p, centred at the space's basepoint."""
    return [space.monomial(m) for m in range(space.size) if bin(m).count("1") <= p]


def check_l2_structure(n: int = 3) -> VerificationReport:
    if n != 3:
        raise DimensionError(f"the line-class sequence is checked on GF(2)^3, got n={n}")
    space = Z2Space(n)
    quotient = QuotientMap(affine_basis(space))
    report = VerificationReport(title=f"L2 = Maps/Aff on GF(2)^{n}")

    dim_maps = space.size
    dim_aff = quotient.sub_dim
    dim_l2 = dim_maps - dim_aff
    report.add(
        "dimensions",
        dim_aff == n + 1 and dim_l2 == n + 1,
        f"dim Maps = {dim_maps}, dim Aff = {dim_aff}, dim L2 = {dim_l2}; 0 -> V -> L2 -> Z2 -> 0 has {n} + 1",
        dim_maps=dim_maps,
        dim_aff=dim_aff,
        dim_l2=dim_l2,
    )

    # (a) well-defined and linear
    def line_class(q: int, v: int) -> Tuple[int, ...]:
        return quotient.cls(space.delta(space.line(q, v)))

    bad_basepoint = [
        v for v in range(space.size) if len({line_class(q, v) for q in range(space.size)}) != 1
    ]
    report.add(
        "line_class_well_defined",
        not bad_basepoint,
        "[delta_Z_v] does not depend on the basepoint of the line",
        witnesses=bad_basepoint,
    )

    classes = {v: np.array(line_class(0, v), dtype=np.uint8) for v in range(space.size)}
    bad_linear = [
        (v, w)
        for v, w in itertools.product(range(space.size), repeat=2)
        if not np.array_equal(classes[v ^ w], classes[v] ^ classes[w])
    ]
    report.add(
        "line_class_linear",
        not bad_linear,
        f"[delta_Z_(v+w)] = [delta_Z_v] + [delta_Z_w] on all {space.size ** 2} pairs",
        witnesses=bad_linear,
    )
    report.add(
        "empty_line_zero",
        not classes[0].any(),
        "Z_0 is empty and has class 0",
    )

    # (b) injective
    zero_images = [v for v in range(1, space.size) if not classes[v].any()]
    report.add("line_class_injective", not zero_images, "v != 0 gives a nonzero class", witnesses=zero_images)

    # (c) cokernel generated by [delta_q]
    image = [classes[1 << i] for i in range(n)]
    image_dim = _rank_of(image)
    point_class = np.array(quotient.cls(space.delta([0])), dtype=np.uint8)
    with_point = _rank_of(image + [point_class])
    report.add(
        "cokernel_by_point",
        image_dim == n and with_point == dim_l2 and with_point == image_dim + 1,
        f"image has dimension {image_dim}; adding [delta_q] reaches dim L2 = {dim_l2}",
        image_dim=image_dim,
    )

    # (d) parallel lines and only they share a class
    lines = [tuple(sorted(pair)) for pair in itertools.combinations(range(space.size), 2)]
    bad_parallel = []
    for l1, l2 in itertools.product(lines, repeat=2):
        parallel = (l1[0] ^ l1[1]) == (l2[0] ^ l2[1])
        same = quotient.cls(space.delta(l1)) == quotient.cls(space.delta(l2))
        if parallel != same:
            bad_parallel.append((l1, l2))
    report.add(
        "parallel_iff_equal",
        not bad_parallel,
        f"{len(lines) ** 2} line pairs: equal classes exactly for parallel lines",
        witnesses=bad_parallel,
    )

    # kernel of Maps -> L2 is exactly Aff
    bad_kernel = []
    for f in space.all_functions():
        in_kernel = not quotient.reduce(f).any()
        if in_kernel != (affine_decompose(f) is not None) or in_kernel != delta_characterization(f):
            bad_kernel.append(f.support)
    report.add(
        "kernel_is_affine",
        not bad_kernel,
        f"all {1 << space.size} functions: class 0 iff affine iff delta_W / 1 + delta_W",
        witnesses=bad_kernel,
    )

    # (e) the two-dimensional quotient
    report.extend(_plane_quotient(), prefix="n2.")

    # (f) basepoint transitions
    bad_translate = []
    for c in range(space.size):
        for g in affine_basis(space):
            if quotient.reduce(space.translate(g, c)).any():
                bad_translate.append(("aff", c))
        for q, v in itertools.product(range(space.size), repeat=2):
            moved = space.translate(space.delta(space.line(q, v)), c)
            if quotient.cls(moved) != tuple(int(x) for x in classes[v]):
                bad_translate.append(("line", c, q, v))
        moved_point = np.array(quotient.cls(space.translate(space.delta([0]), c)), dtype=np.uint8)
        if not np.array_equal(moved_point, point_class ^ classes[c]):
            bad_translate.append(("point", c))
    report.add(
        "basepoint_transitions",
        not bad_translate,
        "translations preserve Aff, fix line classes and shift [delta_q] by the line class",
        witnesses=bad_translate,
    )

    # (g) Aff = K^1
    k1 = [f.values for f in degree_part(space, 1)]
    aff = [f.values for f in affine_basis(space)]
    r_aff, r_k1, r_both = _rank_of(aff), _rank_of(k1), _rank_of(aff + k1)
    report.add(
        "affine_equals_k1",
        r_aff == r_k1 == r_both,
        f"dim Aff = dim K^1 = dim(Aff + K^1) = {r_both}",
    )

    logger.info("check_l2_structure(n=%d): %s", n, "PASS" if report.passed else "FAIL")
    return report


def _plane_quotient() -> VerificationReport:
    space = Z2Space(2)
    quotient = QuotientMap(affine_basis(space))
    report = VerificationReport(title="Maps/Aff on GF(2)^2")

    dim_l2 = space.size - quotient.sub_dim
    report.add("dimension", dim_l2 == 1, f"Maps/Aff has dimension {dim_l2}")

    point_classes = {quotient.cls(space.delta([q])) for q in range(space.size)}
    generator = next(iter(point_classes))
    report.add(
        "points_generate",
        len(point_classes) == 1 and any(generator),
        "every [delta_q] equals the same nonzero class",
    )

    line_nonzero = [
        (q, v)
        for q, v in itertools.product(range(space.size), range(1, space.size))
        if any(quotient.cls(space.delta(space.line(q, v))))
    ]
    report.add("lines_vanish", not line_nonzero, "lines are affine in the plane", witnesses=line_nonzero)

    surjective_kernel = all(
        (not quotient.reduce(f).any()) == (affine_decompose(f) is not None) for f in space.all_functions()
    )
    report.add("kernel_is_affine", surjective_kernel, "Maps -> Z2 -> 0 with kernel Aff")
    return report


def filtration_check(n: int) -> VerificationReport:
    if n not in SUPPORTED_DIMS:
        raise DimensionError(f"filtration check supports n in {SUPPORTED_DIMS}, got {n}")
    space = Z2Space(n)
    report = VerificationReport(title=f"degree filtration on GF(2)^{n}")

    dims = [_rank_of([f.values for f in degree_part(space, p)]) for p in range(n + 1)]
    expected = [sum(comb(n, i) for i in range(p + 1)) for p in range(n + 1)]
    report.add(
        "cumulative_dims",
        dims == expected,
        f"dim K^p = {tuple(dims)}, expected {tuple(expected)}",
        dims=dims,
    )

    quotients = [dims[0]] + [dims[p] - dims[p - 1] for p in range(1, n + 1)]
    report.add(
        "quotient_dims",
        quotients == [comb(n, p) for p in range(n + 1)],
        f"dim K^p/K^(p-1) = {tuple(quotients)} = binomial(n, p) = dim of p-th exterior power",
        quotients=quotients,
    )

    report.add("top_is_everything", dims[-1] == space.size, f"K^{n} has dimension {dims[-1]} = 2^{n}")

    bad_shift = []
    for c in range(space.size):
        shifted = Z2Space(n, basepoint=c)
        for p in range(n + 1):
            base = [f.values for f in degree_part(space, p)]
            moved = [f.values for f in degree_part(shifted, p)]
            if _rank_of(base + moved) != dims[p]:
                bad_shift.append((c, p))
    report.add(
        "basepoint_independent",
        not bad_shift,
        "every K^p is unchanged when monomials are centred at another point",
        witnesses=bad_shift,
    )

    quotient = QuotientMap(affine_basis(space))
    report.add(
        "top_over_k1_is_l2",
        dims[-1] - dims[1] == space.size - quotient.sub_dim,
        f"dim K^{n}/K^1 = {dims[-1] - dims[1]} = dim Maps/Aff",
    )

    logger.info("filtration_check(n=%d): %s", n, "PASS" if report.passed else "FAIL")
    return report


def _cross(u: int, w: int) -> int:
    """Cross product over GF(2) of two points of GF(2)^3 (the contraction with x1^x2^x3)."""
    a = [(u >> i) & 1 for i in range(3)]
    b = [(w >> i) & 1 for i in range(3)]
    c = [
        (a[1] & b[2]) ^ (a[2] & b[1]),
        (a[2] & b[0]) ^ (a[0] & b[2]),
        (a[0] & b[1]) ^ (a[1] & b[0]),
    ]
    return c[0] | (c[1] << 1) | (c[2] << 2)


def _covector_bits(linear: Sequence[int]) -> int:
    return sum((int(c) & 1) << i for i, c in enumerate(linear))


def alpha(space: Z2Space, e1: int, e2: int, f1: int, f2: int) -> FnTable:
    return space.delta([0, e1 ^ e2, f1, f1 ^ e1, f2, f2 ^ e2])


def classify_tuple(e1: int, e2: int, f1: int, f2: int) -> int:
    """
    1: e1, e2 dependent
    2: the lines {0, e1+e2}, {f1, f1+e1}, {f2, f2+e2} coplanar and concurrent
    3: coplanar with three distinct pairwise intersections
    4: not coplanar
    """
    if e1 == 0 or e2 == 0 or e1 == e2:
        return 1
    plane = {0, e1, e2, e1 ^ e2}
    if f1 not in plane or f2 not in plane:
        return 4
    a = {0, e1 ^ e2}
    b = {f1, f1 ^ e1}
    c = {f2, f2 ^ e2}
    return 2 if a & b & c else 3


def _apply(matrix: np.ndarray, x: int) -> int:
    v = np.array([(x >> i) & 1 for i in range(3)], dtype=np.int64)
    y = (matrix.astype(np.int64) @ v) & 1
    return int(y[0] | (y[1] << 1) | (y[2] << 2))


def random_automorphism(rng: np.random.Generator) -> np.ndarray:
    while True:
        m = rng.integers(0, 2, size=(3, 3)).astype(np.uint8)
        if rank(BitMatrix.from_dense(m)) == 3:
            return m


def beta_identity_check(seed: int = 0, automorphisms: int = 8, samples: int = 64) -> VerificationReport:
    space = Z2Space(3)
    report = VerificationReport(title="twisted squaring identity on GF(2)^3")

    not_affine: List[Tuple[int, int, int, int]] = []
    mismatch: List[Tuple[int, int, int, int]] = []
    cases: Counter = Counter()
    passed_by_case: Counter = Counter()
    linear_parts: Dict[Tuple[int, int, int, int], int] = {}

    for e1, e2, f1, f2 in itertools.product(range(8), repeat=4):
        key = (e1, e2, f1, f2)
        case = classify_tuple(*key)
        cases[case] += 1
        form = affine_decompose(alpha(space, *key))
        if form is None:
            not_affine.append(key)
            continue
        lin = _covector_bits(form.linear)
        linear_parts[key] = lin
        if lin != (_cross(e1, e2) ^ _cross(e1, f1) ^ _cross(e2, f2)):
            mismatch.append(key)
        else:
            passed_by_case[case] += 1

    total = 8**4
    report.add("alpha_affine", not not_affine, f"{total - len(not_affine)}/{total} alphas are affine", witnesses=not_affine)
    report.add(
        "linear_part_identity",
        not mismatch,
        f"{total - len(mismatch)}/{total} tuples satisfy Lin(alpha) = e1^e2 + e1^f1 + e2^f2",
        witnesses=mismatch,
        agreeing=total - len(mismatch),
    )
    report.add(
        "case_breakdown",
        dict(cases) == EXPECTED_CASE_COUNTS and passed_by_case == cases,
        "cases 1-4: " + ", ".join(f"{k}: {passed_by_case[k]}/{cases[k]}" for k in sorted(cases)),
        counts={str(k): cases[k] for k in sorted(cases)},
    )

    rng = np.random.default_rng(seed)
    bad_equivariance = []
    for _ in range(automorphisms):
        a = random_automorphism(rng)
        for _ in range(samples):
            key = tuple(int(x) for x in rng.integers(0, 8, size=4))
            moved = tuple(_apply(a, x) for x in key)
            form = affine_decompose(alpha(space, *moved))
            if form is None or key not in linear_parts:
                bad_equivariance.append(key)
                continue
            lin_moved = np.array(form.linear, dtype=np.int64)
            pulled = (lin_moved @ a.astype(np.int64)) & 1
            if _covector_bits(pulled) != linear_parts[key]:
                bad_equivariance.append(key)
    report.add(
        "gl3_equivariance",
        not bad_equivariance,
        f"{automorphisms} random automorphisms x {samples} tuples: Lin(alpha o A^-1) A = Lin(alpha)",
        witnesses=bad_equivariance,
    )

    logger.info("beta_identity_check: %s", "PASS" if report.passed else "FAIL")
    return report

# realquintic/twist/local_cases.py
"""
Local form of D1.(D1 + L).D2 = 0.

Every unordered generator pair {D1, D2} yields one parity equation
|L n A| = r over a small set A of divisors near the pair. The case decides
A and r from the geometry of the triangulated 2-skeleton:

    none  no common 2-face                     A = {}                       r = 0
    1.1   adjacent in one 2-face, not co-edge  A = {D1, D2, apex, apex}     r = 1
    1.2   same 2-face, not adjacent            A = {}                       r = 0
    1.3   D1 = D2 interior to a 2-face         A = its 6 neighbours         r = 0
    2.1   D1 = D2 on an edge of P              A = S_D                      r = 1
    2.2   co-edge, T(D1, D1, D2) = 1           A = {D1, D2} + third vertices r = 1
    2.3   co-edge, T(D1, D1, D2) = 0           A = third vertices            r = 0

The geometric prediction is compared against the table; disagreements are
reported as mismatches.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from realquintic.polytope.lattice import bary_of, two_faces
from realquintic.polytope.triangulation import Triangulation
from realquintic.toric.table_checks import EXPECTED_S_SIZE, squares_set
from realquintic.toric.triple_table import TripleTable
from realquintic.twist.pairings import TwistClass
from realquintic.twist.twist_errors import ClassificationError, InputError

logger = logging.getLogger(__name__)

CASES = ("none", "1.1", "1.2", "1.3", "2.1", "2.2", "2.3")


@lru_cache(maxsize=None)
def _carrier(pid: str) -> frozenset[int]:
    return frozenset(i for i, b in enumerate(bary_of(pid)) if b > 0)


@dataclass(frozen=True)
class LocalEquation:
    pair: Tuple[str, str]
    case: str
    support: Tuple[str, ...]
    parity: int


@dataclass(frozen=True)
class LocalSystem:
    basis: Tuple[str, ...]
    equations: Tuple[LocalEquation, ...]
    matrix: np.ndarray
    rhs: np.ndarray
    mismatches: Tuple[Tuple[str, str, str], ...]

    @property
    def consistent(self) -> bool:
        return not self.mismatches


@dataclass
class CaseReport:
    counts: Dict[str, Dict[str, int]] = field(default_factory=dict)
    witnesses: Dict[str, List[Tuple[str, str]]] = field(default_factory=dict)
    mismatches: List[Tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c["fail"] == 0 for c in self.counts.values())

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    @property
    def total_failures(self) -> int:
        return sum(c["fail"] for c in self.counts.values())

    def to_dict(self) -> Dict[str, object]:
        return {
            "passed": self.passed,
            "consistent": self.consistent,
            "counts": {k: dict(v) for k, v in self.counts.items()},
            "witnesses": {k: [list(p) for p in v] for k, v in self.witnesses.items()},
            "mismatches": [list(m) for m in self.mismatches],
        }

    def to_text(self) -> str:
        lines = ["== local parity cases =="]
        for case in CASES:
            c = self.counts.get(case, {"pass": 0, "fail": 0})
            status = "PASS" if c["fail"] == 0 else "FAIL"
            lines.append(f"[{status}] case {case:<4} pass={c['pass']:<5} fail={c['fail']}")
            for w in self.witnesses.get(case, [])[:5]:
                lines.append(f"    witness: {list(w)}")
        if self.mismatches:
            lines.append(f"table/formula mismatches: {len(self.mismatches)}")
            for m in self.mismatches[:5]:
                lines.append(f"    mismatch: {list(m)}")
        lines.append(f"overall: {'PASS' if self.passed and self.consistent else 'FAIL'}")
        return "\n".join(lines)


def _edge_adjacent(tri: Triangulation, edge: frozenset[int], a: str, b: str) -> bool:
    i, j = sorted(edge)
    return frozenset((a, b)) in tri.edge_segments(i, j)


def _face_adjacent(tri: Triangulation, face: Tuple[int, ...], a: str, b: str) -> bool:
    return any(a in tr and b in tr for tr in tri.face_triangles(face))


def _third_vertices(tri: Triangulation, edge: frozenset[int], a: str, b: str) -> List[str]:
    out: List[str] = []
    for face in two_faces():
        if edge <= set(face):
            out.extend(tri.opposite_apexes(face, a, b))
    return out


def classify_pair(t: TripleTable, tri: Triangulation, a: str, b: str) -> LocalEquation:
    if a == b:
        if a[0] in EXPECTED_S_SIZE:
            return LocalEquation((a, b), "2.1", tuple(squares_set(t, a)), 1)
        face = tuple(sorted(_carrier(a)))
        return LocalEquation((a, b), "1.3", tuple(tri.face_neighbors(face, a)), 0)

    union = _carrier(a) | _carrier(b)
    if len(union) <= 2:
        r_ab, r_ba = t(a, a, b), t(b, b, a)
        if r_ab != r_ba:
            raise ClassificationError(
                (a, b), ("2.2", "2.3"), f"T(D1,D1,D2) = {r_ab} but T(D2,D2,D1) = {r_ba}"
            )
        third = _third_vertices(tri, union, a, b) if _edge_adjacent(tri, union, a, b) else []
        if r_ab == 1:
            return LocalEquation((a, b), "2.2", tuple([a, b] + third), 1)
        return LocalEquation((a, b), "2.3", tuple(third), 0)

    if len(union) == 3:
        face = tuple(sorted(union))
        if _face_adjacent(tri, face, a, b):
            apexes = tri.opposite_apexes(face, a, b)
            return LocalEquation((a, b), "1.1", tuple([a, b] + apexes), 1)
        return LocalEquation((a, b), "1.2", (), 0)

    return LocalEquation((a, b), "none", (), 0)


def build_local_system(t: TripleTable, tri: Triangulation) -> LocalSystem:
    index = t.index
    equations: List[LocalEquation] = []
    mismatches: List[Tuple[str, str, str]] = []
    for ia, ib in itertools.combinations_with_replacement(range(t.size), 2):
        a, b = t.basis[ia], t.basis[ib]
        eq = classify_pair(t, tri, a, b)
        equations.append(eq)

        table_support = {t.basis[d] for d in np.nonzero(t.t2[:, ia, ib])[0]}
        if table_support != set(eq.support):
            mismatches.append((a, b, f"case {eq.case}: support differs from table"))
        elif t(a, a, b) != eq.parity or t(b, b, a) != eq.parity:
            mismatches.append((a, b, f"case {eq.case}: right-hand side differs from table"))
        elif eq.case == "2.1" and len(eq.support) != EXPECTED_S_SIZE[a[0]]:
            mismatches.append((a, b, f"case 2.1: |S_D| = {len(eq.support)}"))
        elif eq.case == "1.3" and len(eq.support) != 6:
            mismatches.append((a, b, f"case 1.3: {len(eq.support)} neighbours"))

    matrix = np.zeros((len(equations), t.size), dtype=np.uint8)
    for row, eq in enumerate(equations):
        for pid in eq.support:
            matrix[row, index[pid]] ^= 1
    rhs = np.array([eq.parity for eq in equations], dtype=np.uint8)

    counts = {c: sum(1 for e in equations if e.case == c) for c in CASES}
    logger.info("local system: %d pair equations %s, %d mismatches", len(equations), counts, len(mismatches))
    return LocalSystem(
        basis=t.basis,
        equations=tuple(equations),
        matrix=matrix,
        rhs=rhs,
        mismatches=tuple(mismatches),
    )


def local_validate(
    t: TripleTable,
    tri: Triangulation,
    twist: TwistClass,
    system: Optional[LocalSystem] = None,
) -> CaseReport:
    system = system or build_local_system(t, tri)
    if twist.basis != system.basis:
        raise InputError("twist basis does not match the table basis")

    parity = (system.matrix.astype(np.int64) @ twist.eps.astype(np.int64)) & 1
    ok = parity == system.rhs

    report = CaseReport(mismatches=list(system.mismatches))
    for case in CASES:
        report.counts[case] = {"pass": 0, "fail": 0}
        report.witnesses[case] = []
    for eq, good in zip(system.equations, ok):
        if good:
            report.counts[eq.case]["pass"] += 1
        else:
            report.counts[eq.case]["fail"] += 1
            if len(report.witnesses[eq.case]) < 10:
                report.witnesses[eq.case].append(eq.pair)
    return report

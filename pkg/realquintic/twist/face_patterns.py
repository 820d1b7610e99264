# realquintic/twist/face_patterns.py
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from realquintic.polytope.lattice import bary_of, edges, face_label, points_in_face, two_faces
from realquintic.twist.pairings import TwistClass
from realquintic.twist.solver import TwistCoset

logger = logging.getLogger(__name__)

Canonical = Tuple[Tuple[int, int, int], ...]

# coset dimensions up to this are searched exhaustively
EXHAUSTIVE_DIM = 16


def canonical_pattern(face: Sequence[int], ids: Sequence[str]) -> Canonical:
    """Smallest relabeling of the L-points of a face under the triangle's S3."""
    local = [tuple(bary_of(p)[i] for i in face) for p in ids]
    forms = []
    for perm in itertools.permutations(range(3)):
        forms.append(tuple(sorted(tuple(pt[k] for k in perm) for pt in local)))
    return min(forms) if forms else ()


@dataclass(frozen=True)
class FacePattern:
    face: str
    points: Tuple[str, ...]
    canonical: Canonical

    @property
    def label(self) -> str:
        return "empty" if not self.points else "decorated"


@dataclass
class PatternReport:
    faces: List[FacePattern] = field(default_factory=list)
    edges_empty: Dict[str, bool] = field(default_factory=dict)

    @property
    def class_ids(self) -> Dict[Canonical, int]:
        ids: Dict[Canonical, int] = {}
        for fp in self.faces:
            ids.setdefault(fp.canonical, len(ids))
        return ids

    @property
    def n_classes(self) -> int:
        return len(self.class_ids)

    @property
    def multiplicities(self) -> List[int]:
        return sorted(Counter(fp.canonical for fp in self.faces).values(), reverse=True)

    def class_multiset(self) -> Counter:
        return Counter(fp.canonical for fp in self.faces)

    @property
    def all_edges_empty(self) -> bool:
        return all(self.edges_empty.values())

    def frame(self) -> pd.DataFrame:
        ids = self.class_ids
        return pd.DataFrame(
            [
                {
                    "face": fp.face,
                    "label": fp.label,
                    "l_points": len(fp.points),
                    "class": ids[fp.canonical],
                    "support": " ".join(fp.points),
                }
                for fp in self.faces
            ]
        )

    def to_dict(self) -> Dict[str, object]:
        ids = self.class_ids
        return {
            "n_classes": self.n_classes,
            "multiplicities": self.multiplicities,
            "all_edges_empty": self.all_edges_empty,
            "edges_empty": dict(self.edges_empty),
            "faces": [
                {
                    "face": fp.face,
                    "label": fp.label,
                    "class": ids[fp.canonical],
                    "points": list(fp.points),
                }
                for fp in self.faces
            ],
        }

    def to_text(self) -> str:
        lines = [
            f"pattern classes: {self.n_classes} (multiplicities {self.multiplicities})",
            f"edges of P free of L-points: {sum(self.edges_empty.values())}/{len(self.edges_empty)}",
            self.frame().to_string(index=False),
        ]
        return "\n".join(lines)


def face_patterns(twist: TwistClass) -> PatternReport:
    support = set(twist.support)
    report = PatternReport()
    for face in two_faces():
        pts = tuple(p.id for p in points_in_face(face) if p.id in support)
        report.faces.append(
            FacePattern(face=face_label(face), points=pts, canonical=canonical_pattern(face, pts))
        )
    for i, j in edges():
        report.edges_empty[f"{i}{j}"] = not any(
            f"E{i}{j}:{ell}" in support for ell in range(1, 5)
        )
    return report


def _score(twist: TwistClass, report: PatternReport) -> tuple:
    return (report.n_classes, len(twist.support), tuple(int(x) for x in twist.eps))


def minimize_patterns(
    coset: TwistCoset,
    seed: int = 0,
    samples: int = 4096,
) -> Tuple[TwistClass, PatternReport]:
    """
    Coset member with the fewest distinct face-pattern classes.

    Ties go to the smaller support, then to the lexicographically smaller
    coefficient vector, so the result does not depend on enumeration order.
    """
    best: Optional[Tuple[tuple, TwistClass, PatternReport]] = None

    if coset.dim <= EXHAUSTIVE_DIM:
        candidates = coset.members()
    else:
        rng = np.random.default_rng(seed)
        candidates = itertools.chain(
            [coset.particular], (coset.random_member(rng) for _ in range(samples))
        )

    for twist in candidates:
        rep = face_patterns(twist)
        score = _score(twist, rep)
        if best is None or score < best[0]:
            best = (score, twist, rep)

    assert best is not None
    logger.info("pattern search: best member has %d classes", best[2].n_classes)
    return best[1], best[2]

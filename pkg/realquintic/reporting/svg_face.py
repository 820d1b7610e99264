# realquintic/reporting/svg_face.py
"""
SVG drawing of one triangulated 2-face of P.

The face (i, j, k) is mapped to a fixed equilateral triangle; a point with
face barycentrics (a, b, c) lands at b * (1, 0) + c * (1/2, sqrt(3)/2),
scaled by SIZE / DEGREE. Coordinates are written with fixed precision and
elements in sorted order, so equal inputs give byte-identical files.
"""

from __future__ import annotations

import logging
import math
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Dict, Sequence, Tuple, Union

from realquintic.polytope.lattice import DEGREE, bary_of, face_label, points_in_face, two_faces
from realquintic.polytope.triangulation import Triangulation
from realquintic.twist.pairings import TwistClass

logger = logging.getLogger(__name__)

SIZE = 400.0
MARGIN = 20.0
RADIUS = 6.0

SVG_NS = "http://www.w3.org/2000/svg"


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def face_coordinates(face: Sequence[int], pid: str) -> Tuple[float, float]:
    bary = bary_of(pid)
    b, c = bary[face[1]], bary[face[2]]
    unit = SIZE / DEGREE
    x = MARGIN + unit * (b + 0.5 * c)
    # SVG y grows downwards
    y = MARGIN + SIZE * math.sqrt(3) / 2 - unit * c * math.sqrt(3) / 2
    return x, y


def face_svg(face: Sequence[int], triangulation: Triangulation, twist: TwistClass) -> ET.Element:
    face = tuple(sorted(face))
    label = face_label(face)
    support = set(twist.support)
    pos: Dict[str, Tuple[float, float]] = {p.id: face_coordinates(face, p.id) for p in points_in_face(face)}

    width = SIZE + 2 * MARGIN
    height = SIZE * math.sqrt(3) / 2 + 2 * MARGIN
    svg = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=_fmt(width),
        height=_fmt(height),
        viewBox=f"0 0 {_fmt(width)} {_fmt(height)}",
    )
    title = ET.SubElement(svg, "title")
    title.text = f"2-face {label}: {sum(1 for p in pos if p in support)} L-points"

    style = ET.SubElement(svg, "style")
    style.text = (
        "polygon {fill: none; stroke: black; stroke-width: 1;} "
        "circle {stroke: black; stroke-width: 1;} "
        "circle.L {fill: red;} circle.free {fill: white;}"
    )

    mesh = ET.SubElement(svg, "g", id=f"triangles-{label}")
    for tri in sorted(tuple(sorted(t)) for t in triangulation.face_triangles(face)):
        ET.SubElement(
            mesh,
            "polygon",
            points=" ".join(f"{_fmt(pos[p][0])},{_fmt(pos[p][1])}" for p in tri),
        )

    dots = ET.SubElement(svg, "g", id=f"points-{label}")
    for pid in sorted(pos):
        x, y = pos[pid]
        circle = ET.SubElement(
            dots,
            "circle",
            cx=_fmt(x),
            cy=_fmt(y),
            r=_fmt(RADIUS),
            attrib={"class": "L" if pid in support else "free"},
        )
        ET.SubElement(circle, "title").text = pid
    return svg


def emit_face_svg(
    face: Sequence[int],
    triangulation: Triangulation,
    twist: TwistClass,
    path: Union[str, Path],
) -> Path:
    """Write the face drawing; an unwritable path raises OSError."""
    out = Path(path)
    tree = ET.ElementTree(face_svg(face, triangulation, twist))
    ET.indent(tree)
    with out.open("wb") as f:
        tree.write(f, encoding="utf-8", xml_declaration=True)
    logger.debug("wrote %s", out)
    return out


def emit_all_faces(triangulation: Triangulation, twist: TwistClass, directory: Union[str, Path]) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    return [emit_face_svg(face, triangulation, twist, d / f"face_{face_label(face)}.svg") for face in two_faces()]

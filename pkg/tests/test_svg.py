from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from realquintic.reporting.svg_face import emit_all_faces, emit_face_svg, face_svg
from realquintic.twist.face_patterns import face_patterns
from realquintic.twist.pairings import TwistClass

NS = {"svg": "http://www.w3.org/2000/svg"}


def _parse(path: Path) -> ET.Element:
    return ET.parse(path).getroot()


def test_zero_twist_has_no_marked_points(table, triangulation, tmp_path: Path) -> None:
    out = emit_face_svg((0, 1, 2), triangulation, TwistClass.zero(table.basis), tmp_path / "face.svg")
    root = _parse(out)
    circles = root.findall(".//svg:circle", NS)
    assert len(circles) == 21
    assert len(root.findall(".//svg:polygon", NS)) == 25
    assert all(c.get("class") == "free" for c in circles)


def test_marked_points_follow_the_pattern(table, triangulation, coset, tmp_path: Path) -> None:
    twist = coset.particular
    paths = emit_all_faces(triangulation, twist, tmp_path / "faces")
    assert len(paths) == 10
    report = face_patterns(twist)
    for fp, path in zip(report.faces, paths):
        assert path.name == f"face_{fp.face}.svg"
        marked = [c for c in _parse(path).findall(".//svg:circle", NS) if c.get("class") == "L"]
        assert len(marked) == len(fp.points)


def test_output_is_byte_deterministic(table, triangulation, tmp_path: Path) -> None:
    twist = TwistClass.from_ids(table.basis, ["E01:2", "F012:3"])
    a = emit_face_svg((0, 1, 2), triangulation, twist, tmp_path / "a.svg").read_bytes()
    b = emit_face_svg((2, 0, 1), triangulation, twist, tmp_path / "b.svg").read_bytes()
    assert a == b
    assert a.startswith(b"<?xml")
    assert b'class="L"' in a


def test_titles_name_the_points(table, triangulation) -> None:
    svg = face_svg((1, 3, 4), triangulation, TwistClass.zero(table.basis))
    assert svg.find("title").text.startswith("2-face 134")
    names = {t.text for t in svg.iter("title")}
    assert {"V1", "V3", "V4"} <= names


def test_unwritable_path_raises(table, triangulation, tmp_path: Path) -> None:
    with pytest.raises(OSError):
        emit_face_svg((0, 1, 2), triangulation, TwistClass.zero(table.basis), tmp_path / "missing" / "face.svg")

import xml.etree.ElementTree as ET

import pytest

from fibwords.plot import emit_svg, plot_christoffel, render_ascii
from fibwords.words import christoffel_path

SVG = "{http://www.w3.org/2000/svg}"


def parse(doc):
    return ET.fromstring(doc.encode())


def polyline_points(doc):
    node = parse(doc).find(f"{SVG}polyline")
    return [tuple(map(int, p.split(","))) for p in node.get("points").split()]


def test_svg_c7():
    doc = emit_svg(christoffel_path(7), 7)
    pts = polyline_points(doc)
    assert len(pts) == 14  # 13 unit steps
    root = parse(doc)
    grid = root.find(f"{SVG}g")
    assert len(grid.findall(f"{SVG}line")) == 9 + 6
    seg = root.find(f"{SVG}line[@id='segment']")
    assert (seg.get("x1"), seg.get("y1")) == tuple(map(str, pts[0]))
    assert (seg.get("x2"), seg.get("y2")) == tuple(map(str, pts[-1]))
    # every step is one grid cell long
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        assert abs(x1 - x0) + abs(y1 - y0) == 40


def test_svg_c3():
    assert len(polyline_points(emit_svg(christoffel_path(3), 3))) == 3


def test_svg_deterministic():
    a = plot_christoffel(8, "upper", "svg")
    b = plot_christoffel(8, "upper", "svg")
    assert a.encode() == b.encode()


def test_ascii_counts():
    for kind in ("lower", "upper"):
        text = render_ascii(christoffel_path(7, kind), 7)
        assert text.count("_") == 8
        assert text.count("|") == 5
        assert len(text.splitlines()) == 6


def test_ascii_c3():
    assert render_ascii(christoffel_path(3), 3).splitlines()[-1].startswith(".")
    assert plot_christoffel(3, "lower", "ascii").count("_") == 1


def test_bad_format():
    with pytest.raises(ValueError):
        plot_christoffel(5, "lower", "png")

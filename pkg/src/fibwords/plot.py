"""SVG and ASCII renderings of Christoffel lattice paths."""

from xml.sax.saxutils import escape

from .words import christoffel_path, segment_end

__all__ = ["emit_svg", "render_ascii", "plot_christoffel"]

CELL = 40
MARGIN = 20


def emit_svg(path, n, title=None):
    """SVG document with the unit grid, the segment to (F_{n-1}, F_{n-2})
    and the step path. Output is byte-for-byte deterministic."""
    a, b = segment_end(n)
    width = a * CELL + 2 * MARGIN
    height = b * CELL + 2 * MARGIN

    def px(x, y):
        return MARGIN + x * CELL, MARGIN + (b - y) * CELL

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        lines.append(f"<title>{escape(title)}</title>")
    lines.append('<g id="grid" stroke="#cccccc" stroke-width="1">')
    for x in range(a + 1):
        (x0, y0), (x1, y1) = px(x, 0), px(x, b)
        lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    for y in range(b + 1):
        (x0, y0), (x1, y1) = px(0, y), px(a, y)
        lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    lines.append("</g>")
    (x0, y0), (x1, y1) = px(0, 0), px(a, b)
    lines.append(
        f'<line id="segment" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
        'stroke="#d62728" stroke-width="2"/>'
    )
    pts = " ".join("%d,%d" % px(x, y) for x, y in path.points)
    lines.append(
        f'<polyline id="path" points="{pts}" fill="none" stroke="#1f77b4" stroke-width="3"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_ascii(path, n):
    """Text staircase: '_' for a right step, '|' for an up step, '.' where
    the segment crosses an otherwise empty cell."""
    a, b = segment_end(n)
    rows = [[" "] * (2 * a + 1) for _ in range(b + 1)]
    for col in range(2 * a + 1):
        # segment height at x = col / 2
        row = (col * b) // (2 * a)
        if row <= b:
            rows[row][col] = "."
    for (x0, y0), (x1, y1) in zip(path.points, path.points[1:]):
        if x1 > x0:
            rows[y0][2 * x0 + 1] = "_"
        else:
            rows[y0][2 * x0] = "|"
    return "\n".join("".join(r).rstrip() for r in reversed(rows)) + "\n"


def plot_christoffel(n, kind="lower", fmt="svg"):
    path = christoffel_path(n, kind)
    if fmt == "svg":
        return emit_svg(path, n, title=f"{kind} Christoffel word, n={n}")
    if fmt == "ascii":
        return render_ascii(path, n)
    raise ValueError(f"format must be 'svg' or 'ascii', got {fmt!r}")

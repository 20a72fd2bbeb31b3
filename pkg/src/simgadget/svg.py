"""SVG figure emission.

Two modes.  Drawing mode renders exact grid coordinates: one line element
per instance edge, small circles for vertices, and a marker circle at every
legal crossing reported by the verifier.  Certificate mode renders a
schematic straight-line layout of the planarized graph, with the dummy
vertices shown as crossing markers; it is a picture of the combinatorial
structure, not a verified drawing.

Colors follow one convention everywhere: shared edges black (thick when
both endpoints carry gadget tags, i.e. the pumpkin), layer-1 private edges
blue, layer-2 private edges red.  SVG y grows downward, so coordinates are
flipped at emission; the optional stretch factor scales y only.
"""

from __future__ import annotations

import networkx as nx

from .certificates import CrossingStructure, planarize_detailed
from .drawing import GridDrawing, verify_drawing
from .errors import FormatError, UnsupportedMode
from .graphs import SHARED, SefeInstance, nx_graph, simplify

UNIT = 10          # pixels per grid unit
MARGIN = 20

STYLE = (
    "line.shared{stroke:#000000;stroke-width:1}"
    "line.shared.pumpkin{stroke-width:3}"
    "line.p1{stroke:#1f4fd8;stroke-width:1}"
    "line.p2{stroke:#d02020;stroke-width:1}"
    "circle.vertex{fill:#000000}"
    "circle.crossing{fill:none;stroke:#208020;stroke-width:1.5}"
)


def _fmt(value) -> str:
    return f"{float(value):.3f}".rstrip("0").rstrip(".")


def _document(width, height, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
        f"<style>{STYLE}</style>\n"
    )
    return head + "\n".join(body) + ("\n" if body else "") + "</svg>\n"


def emit_svg(
    inst: SefeInstance,
    drawing: GridDrawing | None = None,
    cert: CrossingStructure | None = None,
    stretch: int = 1,
) -> str:
    if stretch < 1:
        raise FormatError(f"stretch must be at least 1, got {stretch}")
    if drawing is not None and cert is not None:
        raise UnsupportedMode("give a drawing or a certificate, not both")
    if drawing is not None:
        return _emit_drawing(inst, drawing, stretch)
    if cert is not None:
        return _emit_certificate(inst, cert, stretch)
    raise UnsupportedMode("nothing to render: need a drawing or a certificate")


def _emit_drawing(inst: SefeInstance, drawing: GridDrawing, stretch: int) -> str:
    coords = drawing.coords
    if not coords and inst.n == 0:
        return _document(2 * MARGIN, 2 * MARGIN, [])
    report = verify_drawing(inst, drawing)

    xs = [x for x, _ in coords.values()]
    ys = [y * stretch for _, y in coords.values()]
    xmin, ymax = min(xs), max(ys)

    def place(x, y):
        return (
            (x - xmin) * UNIT + MARGIN,
            (ymax - y * stretch) * UNIT + MARGIN,
        )

    width = (max(xs) - xmin) * UNIT + 2 * MARGIN
    height = (ymax - min(ys)) * UNIT + 2 * MARGIN

    body: list[str] = []
    for u, v, lab in inst.edges:
        x1, y1 = place(*coords[u])
        x2, y2 = place(*coords[v])
        cls = lab
        if lab == SHARED and u in inst.tags and v in inst.tags:
            cls += " pumpkin"
        body.append(
            f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    for vid in sorted(coords):
        x, y = place(*coords[vid])
        body.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="1.6"/>')
    for rec in report.crossings:
        px, py = rec.point
        x, y = place(px, py)
        body.append(f'<circle class="crossing" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3"/>')
    return _document(width, height, body)


def _layout(graph) -> dict[int, tuple[float, float]]:
    """Planar straight-line positions, one unit square per connected
    component, packed left to right in order of smallest vertex id."""
    g = nx_graph(simplify(graph))
    pos: dict[int, tuple[float, float]] = {}
    offset = 0.0
    for comp in sorted(nx.connected_components(g), key=min):
        nodes = sorted(comp)
        if len(nodes) == 1:
            pos[nodes[0]] = (offset + 0.5, 0.5)
        else:
            local = nx.planar_layout(g.subgraph(nodes))
            xs = [p[0] for p in local.values()]
            ys = [p[1] for p in local.values()]
            xdiv = (max(xs) - min(xs)) or 1.0
            ydiv = (max(ys) - min(ys)) or 1.0
            for vid in nodes:
                x, y = local[vid]
                pos[vid] = (offset + (x - min(xs)) / xdiv, (y - min(ys)) / ydiv)
        offset += 1.2
    return pos


def _emit_certificate(inst: SefeInstance, cert: CrossingStructure, stretch: int) -> str:
    graph, pieces, dummies = planarize_detailed(inst, cert)
    pos = _layout(graph)
    if not pos:
        return _document(2 * MARGIN, 2 * MARGIN, [])
    span = 40 * UNIT
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    xlo, yhi = min(xs), max(ys)
    xdiv = (max(xs) - xlo) or 1.0
    ydiv = (yhi - min(ys)) or 1.0

    def place(vid):
        x, y = pos[vid]
        sx = (x - xlo) / xdiv * span + MARGIN
        sy = (yhi - y) / ydiv * span * stretch + MARGIN
        return sx, sy

    width = span + 2 * MARGIN
    height = span * stretch + 2 * MARGIN

    body: list[str] = []
    for u, v, lab in pieces:
        x1, y1 = place(u)
        x2, y2 = place(v)
        body.append(
            f'<line class="{lab}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    for vid in range(inst.n):
        x, y = place(vid)
        body.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="1.6"/>')
    for vid in dummies:
        x, y = place(vid)
        body.append(f'<circle class="crossing" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3"/>')
    return _document(width, height, body)

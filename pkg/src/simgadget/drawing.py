"""Integer-grid drawings for reduced instances: construction from a planted
3-Partition solution, exhaustive exact verification, and decoding a solution
back out of a valid drawing.

Geometry conventions (one cell = a 4x4 square of grid units):

- each slice's tunnel sits on a horizontal array of `a` cells: the t-facing
  row on the top side, the s-facing row on the bottom, rungs on the vertical
  cell sides, zig-zag diagonals alternating +1/-1 slope starting +1;
- the two anchor points of each cell that its diagonal does not touch are
  `free`; transversal inner vertices land on free anchors left to right;
- arrays are placed left to right, 1-cell gaps inside a triple and 2-cell
  gaps between triples, each array dropped half a cell when its left
  neighbor has odd length (this lines up consecutive free anchors);
- R is the arrays' bounding box plus a 1-cell margin; poles sit 2 cells
  above/below R on its vertical bisector (floored); rim vertex v_j sits on
  the gap column 1 cell left of the next triple's first array, v_0 and v_m
  on R's left/right sides; all pole-facing subdivision vertices lie on R's
  top/bottom sides, vertically aligned with their inner neighbor; the two
  handle vertices sit 1 cell outward of v_0/v_m and 1 cell above t.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, MalformedDrawing, SolutionMismatch, UnmappedVertex
from .geometry import Crossing, Overlap, point_in_open_segment, segments_properly_cross
from .gracsim import GadgetIndex
from .graphs import P1, P2, SefeInstance, edge_key
from .threep import ThreePartitionInstance, ThreePartitionSolution, check_solution, verify_solution


@dataclass(frozen=True)
class GridDrawing:
    coords: dict[int, tuple[int, int]]

    def to_json_dict(self) -> dict:
        return {"coords": {str(v): [x, y] for v, (x, y) in sorted(self.coords.items())}}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "GridDrawing":
        try:
            raw = doc["coords"]
        except (KeyError, TypeError):
            raise FormatError("drawing document needs 'coords'") from None
        coords = {}
        for key, pt in raw.items():
            if len(pt) != 2 or any(type(c) is not int for c in pt):
                raise FormatError(f"coordinates of vertex {key} are not exact integers")
            coords[int(key)] = (pt[0], pt[1])
        return cls(coords)

    @classmethod
    def from_json(cls, text: str) -> "GridDrawing":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class CrossingRecord:
    edge1: int                       # positions in the instance edge list,
    edge2: int                       # edge1 < edge2
    labels: tuple[str, str]
    point: tuple[Fraction, Fraction]
    right_angle: bool


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


@dataclass(frozen=True)
class CrossingReport:
    valid: bool
    crossings: tuple[CrossingRecord, ...]
    violations: tuple[Violation, ...]

    def to_json_dict(self, inst: SefeInstance) -> dict:
        def key(i: int) -> str:
            u, v, lab = inst.edges[i]
            return edge_key(u, v, lab)

        return {
            "valid": self.valid,
            "crossings": [
                {
                    "edge1": key(c.edge1),
                    "edge2": key(c.edge2),
                    "labels": list(c.labels),
                    "point": [
                        [c.point[0].numerator, c.point[0].denominator],
                        [c.point[1].numerator, c.point[1].denominator],
                    ],
                    "right_angle": c.right_angle,
                }
                for c in self.crossings
            ],
            "violations": [{"code": v.code, "detail": v.detail} for v in self.violations],
        }

    def to_json(self, inst: SefeInstance) -> str:
        return json.dumps(self.to_json_dict(inst), indent=2)


def _free_anchors(x0: int, y0: int, a: int) -> list[tuple[int, int]]:
    """The 2a free anchor points of an a-cell array, left to right.  Odd
    cells carry the +1 diagonal (occupying the SW/NE anchors), even cells
    the -1 diagonal, so the free pair alternates."""
    anchors = []
    for c in range(1, a + 1):
        cx = x0 + 4 * (c - 1)
        if c % 2 == 1:
            anchors.append((cx + 1, y0 + 3))
            anchors.append((cx + 3, y0 + 1))
        else:
            anchors.append((cx + 1, y0 + 1))
            anchors.append((cx + 3, y0 + 3))
    return anchors


def construct_drawing(
    inst: SefeInstance, index: GadgetIndex, sol: ThreePartitionSolution
) -> GridDrawing:
    values = index.values()
    m, B = index.m, index.B
    source = ThreePartitionInstance(B, values)
    problems = check_solution(source, sol)
    if problems:
        raise SolutionMismatch("; ".join(problems))
    if len(sol.triples) != m:
        raise SolutionMismatch(f"expected {m} triples, got {len(sol.triples)}")

    # left-to-right array order: triples in solution order, indices ascending
    seq = [i for triple in sol.triples for i in sorted(triple)]
    origins: dict[int, tuple[int, int]] = {}
    x = y = 0
    for pos, i in enumerate(seq):
        a = values[i]
        origins[i] = (x, y)
        if pos + 1 < len(seq):
            x += 4 * a + (4 if pos % 3 != 2 else 8)
            if a % 2 == 1:
                y -= 2
    last = seq[-1]
    x_end = origins[last][0] + 4 * values[last]
    xmin, xmax = -4, x_end + 4
    ymax = 8
    ymin = min(oy for _, oy in origins.values()) - 4

    coords: dict[int, tuple[int, int]] = {}
    for i, sl in enumerate(index.slices):
        x0, y0 = origins[i]
        for k in range(sl.a + 1):
            coords[sl.pi_t[k]] = (x0 + 4 * k, y0 + 4)
            coords[sl.pi_s[k]] = (x0 + 4 * k, y0)
            coords[sl.fan_t[k]] = (x0 + 4 * k, ymax)
            coords[sl.fan_s[k]] = (x0 + 4 * k, ymin)

    for j in range(m):
        anchors = []
        for i in seq[3 * j : 3 * j + 3]:
            x0, y0 = origins[i]
            anchors.extend(_free_anchors(x0, y0, values[i]))
        inner = index.transversals[j].inner
        for p, w in enumerate(inner):
            coords[w] = anchors[p]

    v_pts: list[tuple[int, int]] = []
    for j in range(m):
        x0, y0 = origins[seq[3 * j]]
        v_pts.append((x0 - 4, y0 + 3))
    x0_last, y0_last = origins[last]
    h_last = y0_last + (1 if values[last] % 2 == 1 else 3)
    v_pts.append((x_end + 4, h_last))
    for j, vj in enumerate(index.v):
        coords[vj] = v_pts[j]
        coords[index.spoke_t[j]] = (v_pts[j][0], ymax)
        coords[index.spoke_s[j]] = (v_pts[j][0], ymin)

    tx = (xmin + xmax) // 2
    t_pt = (tx, ymax + 8)
    s_pt = (tx, ymin - 8)
    coords[index.t] = t_pt
    coords[index.s] = s_pt
    coords[index.handle[0]] = (v_pts[0][0] - 4, t_pt[1] + 4)
    coords[index.handle[1]] = (v_pts[m][0] + 4, t_pt[1] + 4)

    return GridDrawing(coords)


def verify_drawing(inst: SefeInstance, d: GridDrawing) -> CrossingReport:
    """Exhaustive exact check of the simultaneous-drawing conditions: all
    vertex points distinct, no vertex interior to a non-incident edge, no
    collinear overlaps, no same-layer or shared-edge crossings, and every
    remaining crossing a perpendicular layer-1 x layer-2 pair."""
    for v in range(inst.n):
        if v not in d.coords:
            raise UnmappedVertex(f"vertex {v} has no coordinates")
    for v in d.coords:
        if not (0 <= v < inst.n):
            raise FormatError(f"coordinates for unknown vertex {v}")

    violations: list[Violation] = []
    by_point: dict[tuple[int, int], list[int]] = {}
    for v in range(inst.n):
        by_point.setdefault(d.coords[v], []).append(v)
    for pt, vs in sorted(by_point.items()):
        if len(vs) > 1:
            violations.append(Violation("duplicate-point", f"vertices {vs} all at {pt}"))

    def key(i: int) -> str:
        u, v, lab = inst.edges[i]
        return edge_key(u, v, lab)

    # vertices in the interior of non-incident edges; x-sorted points let a
    # bbox cut the candidate set down
    xs = sorted((x, y, v) for v, (x, y) in d.coords.items())
    xs_only = [e[0] for e in xs]
    for idx, (u, v, _lab) in enumerate(inst.edges):
        p, q = d.coords[u], d.coords[v]
        lo = bisect_left(xs_only, min(p[0], q[0]))
        y_lo, y_hi = min(p[1], q[1]), max(p[1], q[1])
        for pos in range(lo, len(xs)):
            wx, wy, w = xs[pos]
            if wx > max(p[0], q[0]):
                break
            if w in (u, v) or not (y_lo <= wy <= y_hi):
                continue
            if point_in_open_segment((wx, wy), p, q):
                violations.append(
                    Violation("vertex-on-edge", f"vertex {w} lies inside edge {key(idx)}")
                )

    # exhaustive pair scan, pre-filtered by a sweep over x-extents
    segs = []
    for idx, (u, v, lab) in enumerate(inst.edges):
        p, q = d.coords[u], d.coords[v]
        segs.append(
            (min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1]), idx, u, v, p, q, lab)
        )
    segs.sort()
    crossings: list[CrossingRecord] = []
    for i in range(len(segs)):
        xmin_i, xmax_i, ymin_i, ymax_i, ei, ui, vi, pi_, qi, li = segs[i]
        for j in range(i + 1, len(segs)):
            sj = segs[j]
            if sj[0] > xmax_i:
                break
            if sj[2] > ymax_i or sj[3] < ymin_i:
                continue
            ej, uj, vj, pj, qj, lj = sj[4], sj[5], sj[6], sj[7], sj[8], sj[9]
            res = segments_properly_cross(pi_, qi, pj, qj)
            if res is None:
                continue
            a, b = (ei, ej) if ei < ej else (ej, ei)
            if isinstance(res, Overlap):
                violations.append(Violation("overlap", f"edges {key(a)} and {key(b)} overlap"))
                continue
            la, lb = inst.edges[a][2], inst.edges[b][2]
            crossings.append(CrossingRecord(a, b, (la, lb), res.point, res.perpendicular))
            pair = tuple(sorted((la, lb)))
            if pair != (P1, P2):
                code = "shared-edge-crossing" if "shared" in pair else "same-layer-crossing"
                violations.append(
                    Violation(code, f"edges {key(a)} and {key(b)} cross with labels {la}, {lb}")
                )
            elif not res.perpendicular:
                violations.append(
                    Violation("oblique-crossing", f"edges {key(a)} and {key(b)} cross obliquely")
                )

    crossings.sort(key=lambda c: (c.edge1, c.edge2))
    violations.sort(key=lambda v: (v.code, v.detail))
    return CrossingReport(not violations, tuple(crossings), tuple(violations))


def decode_solution(
    inst: SefeInstance, index: GadgetIndex, d: GridDrawing
) -> ThreePartitionSolution:
    """Read the partition back out of a drawing: each slice joins the wedge
    of the unique transversal path its tunnel edges cross."""
    report = verify_drawing(inst, d)
    if not report.valid:
        raise MalformedDrawing(
            f"drawing fails verification ({report.violations[0].code}: {report.violations[0].detail})"
        )

    pos_of: dict[tuple[int, int, str], int] = {}
    for idx, (u, v, lab) in enumerate(inst.edges):
        pos_of[(u, v, lab) if u < v else (v, u, lab)] = idx

    def positions(edges) -> set[int]:
        return {pos_of[(u, v, lab) if u < v else (v, u, lab)] for u, v, lab in edges}

    slice_of: dict[int, int] = {}
    for i, sl in enumerate(index.slices):
        for idx in positions(sl.rungs) | positions(sl.zigzag):
            slice_of[idx] = i
    path_of: dict[int, int] = {}
    for j, path in enumerate(index.transversals):
        for idx in positions(path.edges):
            path_of[idx] = j

    hits: dict[int, set[int]] = {i: set() for i in range(len(index.slices))}
    for c in report.crossings:
        for a, b in ((c.edge1, c.edge2), (c.edge2, c.edge1)):
            if a in slice_of and b in path_of:
                hits[slice_of[a]].add(path_of[b])
    wedges: dict[int, list[int]] = {j: [] for j in range(len(index.transversals))}
    for i in sorted(hits):
        if len(hits[i]) != 1:
            raise MalformedDrawing(
                f"slice {i} crosses {len(hits[i])} transversal paths, expected exactly 1"
            )
        wedges[next(iter(hits[i]))].append(i)
    triples = []
    for j in sorted(wedges):
        if len(wedges[j]) != 3:
            raise MalformedDrawing(
                f"wedge {j} contains {len(wedges[j])} slices, expected exactly 3"
            )
        triples.append(tuple(sorted(wedges[j])))
    sol = ThreePartitionSolution(tuple(triples))
    source = ThreePartitionInstance(index.B, index.values())
    if not verify_solution(source, sol):
        raise MalformedDrawing("decoded wedge contents do not sum to B")
    return sol

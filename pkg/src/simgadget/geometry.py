"""Exact integer segment predicates.

All inputs are integer grid points; orientation tests stay in integers and
the only rational values ever produced are crossing points (Fractions).
No tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Point = tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    point: tuple[Fraction, Fraction]
    perpendicular: bool


@dataclass(frozen=True)
class Overlap:
    """Collinear segments sharing more than a single point."""


def orientation(o: Point, a: Point, b: Point) -> int:
    """Sign of the cross product (a-o) x (b-o)."""
    d = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    return (d > 0) - (d < 0)


def point_in_open_segment(p: Point, a: Point, b: Point) -> bool:
    """p strictly between a and b on the segment a-b."""
    if p == a or p == b:
        return False
    if orientation(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_properly_cross(
    p1: Point, p2: Point, q1: Point, q2: Point
) -> Crossing | Overlap | None:
    """Interior-interior intersection of open segments p1-p2 and q1-q2.

    Returns a Crossing for a single interior point (with exact rational
    coordinates and a perpendicularity flag), an Overlap signal for
    collinear segments sharing more than a point, and None otherwise --
    including endpoint contacts and endpoint-on-interior touches, which are
    not crossings.
    """
    if p1 == p2 or q1 == q2:
        raise ValueError("degenerate segment")
    o1 = orientation(p1, p2, q1)
    o2 = orientation(p1, p2, q2)
    o3 = orientation(q1, q2, p1)
    o4 = orientation(q1, q2, p2)
    if o1 == 0 and o2 == 0:
        # collinear: overlap iff the 1-D extents share more than a point
        axis = 0 if p1[0] != p2[0] else 1
        a_lo, a_hi = sorted((p1[axis], p2[axis]))
        b_lo, b_hi = sorted((q1[axis], q2[axis]))
        if max(a_lo, b_lo) < min(a_hi, b_hi):
            return Overlap()
        return None
    if o1 * o2 < 0 and o3 * o4 < 0:
        rx, ry = p2[0] - p1[0], p2[1] - p1[1]
        sx, sy = q2[0] - q1[0], q2[1] - q1[1]
        den = rx * sy - ry * sx
        t = Fraction((q1[0] - p1[0]) * sy - (q1[1] - p1[1]) * sx, den)
        point = (p1[0] + t * rx, p1[1] + t * ry)
        return Crossing(point, rx * sx + ry * sy == 0)
    return None

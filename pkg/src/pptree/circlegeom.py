"""Exact geometry of the four mutually tangent circles of a box.

Centers sit at the corners of the ``a x b`` rectangle, ``C1 = (0, 0)``,
``C2 = (a, 0)``, ``C3 = (0, b)``, ``C4 = (a, b)``, with radii ``r1..r4``.
``K4`` encloses the other three.  Coordinates are ``Fraction``s throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import NamedTuple

from .boxcore import FibBox, PptTriple, Radii, box_from_triple, radii_of, triple_from_box
from .errors import InvalidTriple, InvariantViolation

Point = tuple[Fraction, Fraction]

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def _pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class CircleLayout:
    centers: tuple[Point, Point, Point, Point]
    radii: Radii
    width: int
    height: int

    def center(self, i: int) -> Point:
        return self.centers[i - 1]

    def radius(self, i: int) -> int:
        return self.radii[i - 1]


class Line(NamedTuple):
    """``u*x + v*y = w`` with integer coefficients, gcd 1, first nonzero positive."""

    u: int
    v: int
    w: int


@dataclass(frozen=True)
class TangencySet:
    points: dict
    line: Line
    on_line: tuple[tuple[int, int], ...]
    off_line: tuple[tuple[int, int], tuple[int, int]]

    def __getitem__(self, pair) -> Point:
        return self.points[tuple(sorted(pair))]


def _dist2(p: Point, q: Point) -> Fraction:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _tangent_distance(ri: int, rj: int, j: int) -> int:
    # K4 is internally tangent to the others
    return abs(ri - rj) if j == 4 else ri + rj


def check_layout(layout: CircleLayout) -> list[str]:
    """Tangency equations that fail (empty when all six hold)."""
    bad = []
    for i, j in PAIRS:
        d = _tangent_distance(layout.radius(i), layout.radius(j), j)
        if _dist2(layout.center(i), layout.center(j)) != d * d:
            bad.append(f"K{i}K{j}")
    return bad


def circle_layout(box: FibBox) -> CircleLayout:
    r = radii_of(box)
    a, b, _ = triple_from_box(box)
    layout = CircleLayout((_pt(0, 0), _pt(a, 0), _pt(0, b), _pt(a, b)), r, a, b)
    bad = check_layout(layout)
    if bad:
        raise InvariantViolation(f"circles {bad} not tangent for {box}", box)
    return layout


def _tangency_point(layout: CircleLayout, i: int, j: int) -> Point:
    ci, cj = layout.center(i), layout.center(j)
    ri, rj = layout.radius(i), layout.radius(j)
    if j == 4:
        # along C4 -> Ci at distance r4; |C4 Ci| = r4 - ri is an integer
        d = rj - ri
        return (cj[0] + rj * (ci[0] - cj[0]) / d, cj[1] + rj * (ci[1] - cj[1]) / d)
    s = ri + rj
    return ((rj * ci[0] + ri * cj[0]) / s, (rj * ci[1] + ri * cj[1]) / s)


def _collinear(p: Point, q: Point, r: Point) -> bool:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]) == 0


def line_through(p: Point, q: Point) -> Line:
    u = q[1] - p[1]
    v = p[0] - q[0]
    w = u * p[0] + v * p[1]
    scale = 1
    for x in (u, v, w):
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ui, vi, wi = (int(x * scale) for x in (u, v, w))
    g = gcd(gcd(abs(ui), abs(vi)), abs(wi)) or 1
    ui, vi, wi = ui // g, vi // g, wi // g
    if ui < 0 or (ui == 0 and vi < 0):
        ui, vi, wi = -ui, -vi, -wi
    return Line(ui, vi, wi)


def reflect(point: Point, line: Line) -> Point:
    u, v, w = line
    t = Fraction(u * point[0] + v * point[1] - w, u * u + v * v)
    return (point[0] - 2 * u * t, point[1] - 2 * v * t)


def tangency_points(layout: CircleLayout) -> TangencySet:
    """The six tangency points, the line holding four of them, and the other two.

    Raises :class:`InvariantViolation` unless exactly one 4-subset is collinear
    and reflection in its line swaps the remaining pair.
    """
    pts = {pair: _tangency_point(layout, *pair) for pair in PAIRS}
    if len(set(pts.values())) != 6:
        raise InvariantViolation("tangency points are not distinct", layout)
    quads = [
        quad for quad in combinations(PAIRS, 4)
        if all(_collinear(*(pts[k] for k in tri)) for tri in combinations(quad, 3))
    ]
    if len(quads) != 1:
        raise InvariantViolation(f"expected one collinear quadruple, found {len(quads)}", layout)
    quad = quads[0]
    line = line_through(pts[quad[0]], pts[quad[1]])
    rest = tuple(k for k in PAIRS if k not in quad)
    if reflect(pts[rest[0]], line) != pts[rest[1]]:
        raise InvariantViolation("reflection does not swap the off-line tangency points", layout)
    return TangencySet(pts, line, quad, rest)


def descartes_check(r) -> bool:
    """Descartes circle equation with the enclosing circle's curvature negative."""
    k = (Fraction(1, r[0]), Fraction(1, r[1]), Fraction(1, r[2]), -Fraction(1, r[3]))
    return sum(k) ** 2 == 2 * sum(x * x for x in k)


def inexradii_of_triangle(t) -> tuple[int, int, int, int]:
    """Sorted ``(s - c, s - b, s - a, s)``: in-radius and ex-radii of a right triangle."""
    if not isinstance(t, PptTriple):
        try:
            t = PptTriple.from_sides(*t)
        except TypeError:
            raise InvalidTriple(f"expected three integers, got {t!r}") from None
    a, b, c = t
    s = (a + b + c) // 2
    out = tuple(sorted((s - c, s - b, s - a, s)))
    if out != tuple(sorted(radii_of(box_from_triple(t)))):
        raise InvariantViolation(f"in/ex-radii of {tuple(t)} differ from the box radii", t)
    return out


def triangle_from_radii(r) -> tuple[int, int, int]:
    """Sides ``(r1 + r2, r1 + r3, r2 + r3)`` read off any four radii."""
    return (r[0] + r[1], r[0] + r[2], r[1] + r[2])


def radii_product_criterion(r) -> bool:
    """``r1*r4 == r2*r3`` for radii with ``r4 = r1 + r2 + r3``.

    Equivalent to :func:`triangle_from_radii` being Pythagorean.
    """
    return r[0] * r[3] == r[1] * r[2]

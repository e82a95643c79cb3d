"""Exact integer planar predicates.

Coordinates are Python integers bounded by ``COORD_LIMIT`` in absolute
value, so every determinant below is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

COORD_LIMIT = 2**30


class CoordinateError(ValueError):
    """A coordinate lies outside ``[-COORD_LIMIT, COORD_LIMIT]``."""


class DegenerateError(ValueError):
    """Input violates a non-degeneracy precondition."""


class Point(NamedTuple):
    x: int
    y: int


Triangle = tuple[Point, Point, Point]


def _check(p: Sequence[int]) -> None:
    if not (-COORD_LIMIT <= p[0] <= COORD_LIMIT and -COORD_LIMIT <= p[1] <= COORD_LIMIT):
        raise CoordinateError(f"coordinate out of range: {tuple(p)}")


def _orient(p, q, r) -> int:
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product ``(q - p) x (r - p)``.

    +1 for a counterclockwise turn, -1 for clockwise, 0 when collinear.
    """
    _check(p)
    _check(q)
    _check(r)
    return _orient(p, q, r)


def _inside(p, a, b, c, s: int) -> bool:
    # s is the orientation of (a, b, c)
    return _orient(a, b, p) == s and _orient(b, c, p) == s and _orient(c, a, p) == s


def strictly_inside(p: Point, t: Sequence[Point]) -> bool:
    """True iff ``p`` lies in the open interior of triangle ``t``."""
    a, b, c = t
    for q in (p, a, b, c):
        _check(q)
    s = _orient(a, b, c)
    if s == 0:
        raise DegenerateError(f"degenerate triangle {tuple(t)}")
    return _inside(p, a, b, c, s)


def general_position(points: Iterable[Sequence[int]]) -> bool:
    """True iff no three of the points are collinear (cubic, exact)."""
    pts = list(points)
    for p in pts:
        _check(p)
    return all(_orient(p, q, r) != 0 for p, q, r in combinations(pts, 3))


def convex_hull(points: Iterable[Sequence[int]]) -> list[Point]:
    """Extreme points in counterclockwise order (monotone chain).

    Collinear boundary points are dropped.
    """
    pts = sorted(set(Point(*p) for p in points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and _orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def hull_triangle(points: Iterable[Sequence[int]]) -> Optional[Triangle]:
    """The three hull vertices (counterclockwise) if the hull is a triangle.

    The returned order starts at the lexicographically smallest vertex.
    """
    pts = [Point(*p) for p in points]
    if len(pts) < 3:
        raise DegenerateError("need at least 3 points")
    for p in pts:
        _check(p)
    hull = convex_hull(pts)
    if len(hull) < 3:
        raise DegenerateError("all points collinear")
    if len(hull) != 3:
        return None
    return hull[0], hull[1], hull[2]


def _on_segment(p, q, r) -> bool:
    # r collinear with p, q: is it within the closed box of pq?
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_cross(s1: Sequence[Sequence[int]], s2: Sequence[Sequence[int]]) -> bool:
    """True iff two closed segments meet anywhere other than a shared endpoint.

    Collinear overlap counts as crossing; touching at a common endpoint
    does not.
    """
    p, q = s1
    r, s = s2
    shared = {tuple(p), tuple(q)} & {tuple(r), tuple(s)}
    if len(shared) == 2:
        return True  # same segment
    o1 = _orient(p, q, r)
    o2 = _orient(p, q, s)
    o3 = _orient(r, s, p)
    o4 = _orient(r, s, q)
    if shared:
        (m,) = shared
        if o1 != 0 or o2 != 0:
            return False
        # collinear with a common endpoint: overlap iff both others lie on the same side of m
        a = p if tuple(q) == m else q
        b = r if tuple(s) == m else s
        return (a[0] - m[0]) * (b[0] - m[0]) + (a[1] - m[1]) * (b[1] - m[1]) > 0
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_segment(p, q, r):
        return True
    if o2 == 0 and _on_segment(p, q, s):
        return True
    if o3 == 0 and _on_segment(r, s, p):
        return True
    if o4 == 0 and _on_segment(r, s, q):
        return True
    return False


def is_plane_drawing(edges: Iterable[tuple[int, int]], pos: dict) -> bool:
    """Check that straight-line edges drawn at ``pos`` are pairwise non-crossing.

    Vertices must map to distinct points.
    """
    if len(set(pos.values())) != len(pos):
        return False
    segs = [(pos[u], pos[v]) for u, v in edges]
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if segments_cross(segs[i], segs[j]):
                return False
    return True


@dataclass(frozen=True)
class PointSet:
    """Distinct integer points; ``general_position`` records the validated flag."""

    points: tuple[Point, ...]
    general_position: bool

    @classmethod
    def of(cls, points: Iterable[Sequence[int]], require_general_position: bool = True) -> "PointSet":
        pts = tuple(Point(int(p[0]), int(p[1])) for p in points)
        for p in pts:
            _check(p)
        if len(set(pts)) != len(pts):
            raise DegenerateError("duplicate points")
        gp = general_position(pts)
        if require_general_position and not gp:
            raise DegenerateError("points not in general position")
        return cls(pts, gp)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def hull_triangle(self) -> Optional[Triangle]:
        return hull_triangle(self.points)

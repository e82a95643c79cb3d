import pytest
from hypothesis import given, strategies as st

from stackembed.geom import (
    COORD_LIMIT,
    CoordinateError,
    DegenerateError,
    Point,
    PointSet,
    general_position,
    hull_triangle,
    is_plane_drawing,
    orient,
    segments_cross,
    strictly_inside,
)

BIG = st.integers(-COORD_LIMIT, COORD_LIMIT)
SMALL = st.integers(-50, 50)
points = st.builds(Point, BIG, BIG)
small_points = st.builds(Point, SMALL, SMALL)

T12 = ((0, 0), (12, 0), (0, 12))


def test_orient_examples():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (1, 1), (2, 2)) == 0
    assert orient((0, 0), (0, 1), (1, 0)) == -1


def test_orient_bound():
    with pytest.raises(CoordinateError):
        orient((0, 0), (COORD_LIMIT + 1, 0), (0, 1))
    assert orient((-COORD_LIMIT, -COORD_LIMIT), (COORD_LIMIT, -COORD_LIMIT), (COORD_LIMIT, COORD_LIMIT)) == 1


def test_strictly_inside_examples():
    assert strictly_inside((4, 4), T12)
    # orientations by hand: (t1,t2,t3) = +48, (t1,t2,p) = +108, (t2,t3,p) = -32
    assert not strictly_inside((1, 2), ((12, 0), (0, 12), (4, 4)))
    assert not strictly_inside((0, 0), T12)
    assert not strictly_inside((6, 0), T12)  # on an edge
    with pytest.raises(DegenerateError):
        strictly_inside((1, 1), ((0, 0), (1, 1), (2, 2)))


def test_hull_triangle_examples():
    assert hull_triangle([(0, 0), (12, 0), (0, 12), (4, 4)]) == ((0, 0), (12, 0), (0, 12))
    assert hull_triangle([(0, 0), (10, 0), (10, 10), (0, 10)]) is None
    six = [(0, 0), (12, 0), (0, 12), (1, 2), (2, 1), (4, 4)]
    assert hull_triangle(six) == ((0, 0), (12, 0), (0, 12))
    with pytest.raises(DegenerateError):
        hull_triangle([(0, 0), (1, 1)])


def test_general_position_examples():
    assert not general_position([(0, 0), (1, 0), (2, 0)])
    assert general_position([(0, 0), (12, 0), (0, 12), (4, 4)])
    assert general_position([])
    assert general_position([(3, 3)])


def test_segments_cross_examples():
    assert segments_cross(((0, 0), (2, 2)), ((0, 2), (2, 0)))
    assert not segments_cross(((0, 0), (1, 1)), ((1, 1), (2, 0)))
    assert segments_cross(((0, 0), (3, 3)), ((1, 1), (2, 2)))
    assert segments_cross(((0, 0), (2, 0)), ((0, 0), (1, 0)))  # overlap from a shared endpoint
    assert not segments_cross(((0, 0), (1, 0)), ((0, 0), (-1, 0)))
    assert segments_cross(((0, 0), (2, 0)), ((1, 0), (1, 5)))  # T-junction
    assert not segments_cross(((0, 0), (1, 0)), ((2, 1), (3, 1)))


def test_pointset_validation():
    X = PointSet.of([(0, 0), (12, 0), (0, 12), (4, 4)])
    assert X.general_position and len(X) == 4
    with pytest.raises(DegenerateError):
        PointSet.of([(0, 0), (0, 0), (1, 2)])
    with pytest.raises(DegenerateError):
        PointSet.of([(0, 0), (1, 1), (2, 2)])
    assert not PointSet.of([(0, 0), (1, 1), (2, 2)], require_general_position=False).general_position


def test_is_plane_drawing():
    pos = {0: Point(0, 0), 1: Point(12, 0), 2: Point(0, 12), 3: Point(4, 4)}
    k4 = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert is_plane_drawing(k4, pos)
    pos[3] = Point(10, 10)  # outside: edge 0-3 crosses 1-2
    assert not is_plane_drawing(k4, pos)


@given(points, points, points)
def test_orient_antisymmetric(p, q, r):
    s = orient(p, q, r)
    assert orient(q, p, r) == -s
    assert orient(p, r, q) == -s
    assert orient(r, q, p) == -s
    assert orient(q, r, p) == s


@given(small_points, small_points, small_points, small_points)
def test_inside_implies_matching_signs(a, b, c, p):
    s = orient(a, b, c)
    if s == 0:
        return
    if strictly_inside(p, (a, b, c)):
        assert orient(a, b, p) == orient(b, c, p) == orient(c, a, p) == s


@given(st.lists(st.tuples(st.integers(1, 200), st.integers(1, 200)), min_size=2, max_size=12, unique=True))
def test_subtriangle_counts_partition_interior(inner):
    M = 400
    inner = [(x, y) for x, y in inner if x + y < M]
    pts = [(0, 0), (M, 0), (0, M)] + inner
    if len(inner) < 1 or not general_position(pts):
        return
    t = ((0, 0), (M, 0), (0, M))
    for p in inner:
        subs = [(t[1], t[2], p), (t[0], t[2], p), (t[0], t[1], p)]
        counts = [sum(strictly_inside(q, s) for q in inner if q != p) for s in subs]
        assert sum(counts) == len(inner) - 1

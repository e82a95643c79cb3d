"""
Exact predicates on integer points
==================================

Orientation, hulls and segment crossings, all with Python integers.
"""

from stackembed.geom import PointSet, convex_hull, orient, segments_cross, strictly_inside

# counter-clockwise turn is +1, clockwise -1, collinear 0
print(orient((0, 0), (4, 0), (0, 4)), orient((0, 0), (0, 4), (4, 0)), orient((0, 0), (2, 2), (5, 5)))

# huge coordinates are fine as long as they stay below 2**30
big = 2**29
print(orient((0, 0), (big, 1), (big - 1, 1)))

X = PointSet.of([(0, 0), (12, 0), (0, 12), (4, 4), (1, 2)])
print("hull:", convex_hull(X.points))
print("hull triangle (starts at the lexicographic minimum):", X.hull_triangle())
print("(4,4) inside?", strictly_inside((4, 4), X.hull_triangle()))

# a shared endpoint is not a crossing, a collinear overlap is
print(segments_cross(((0, 0), (2, 2)), ((2, 2), (4, 0))))
print(segments_cross(((0, 0), (3, 0)), ((1, 0), (5, 0))))

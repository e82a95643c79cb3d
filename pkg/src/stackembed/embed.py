"""Straight-line embeddings of planar 3-trees on point sets.

With the outer face pinned to the hull of the point set, the apex of every
split is forced: it must be the unique point whose three sub-triangles hold
exactly the required numbers of points.  :func:`decide_embed_fixed` follows
that forced choice down the face tree, so it is exact and quadratic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence

from .geom import (
    DegenerateError,
    Point,
    PointSet,
    _inside,
    _orient,
    general_position,
    hull_triangle,
    is_plane_drawing,
    segments_cross,
)
from .tritree import TriTree, face_tree, reroot

BRUTE_MAX = 9


class EmbedError(ValueError):
    pass


class SizeMismatch(EmbedError):
    pass


class HullNotTriangle(EmbedError):
    pass


class MappingNotHull(EmbedError):
    pass


@dataclass(frozen=True)
class EmbedWitness:
    """``pos[v]`` is the point assigned to vertex ``v``."""

    pos: dict

    def is_plane(self, g: TriTree) -> bool:
        return is_plane_drawing(g.edges(), self.pos)


# apex placement -----------------------------------------------------------


def _partition(cands: Sequence[Point], t: Sequence[Point], p: Point):
    """Split ``cands`` minus ``p`` (all inside ``t``) into the sub-triangles
    ``(t2, t3, p)``, ``(t1, t3, p)``, ``(t1, t2, p)``.

    The rays from ``p`` to the corners cut ``t`` into three sectors, so two
    or three cross products against those rays place each point.
    """
    (x1, y1), (x2, y2), (x3, y3) = t
    px, py = p
    s = _orient(t[0], t[1], t[2])
    ax, ay = (x1 - px) * s, (y1 - py) * s
    bx, by = (x2 - px) * s, (y2 - py) * s
    cx, cy = (x3 - px) * s, (y3 - py) * s
    parts: tuple[list, list, list] = ([], [], [])
    for q in cands:
        dx = q[0] - px
        dy = q[1] - py
        if dx == 0 and dy == 0:
            continue
        ob = bx * dy - by * dx
        oc = cx * dy - cy * dx
        if ob > 0 and oc < 0:
            parts[0].append(q)
        elif oc > 0 and ax * dy - ay * dx < 0:
            parts[1].append(q)
        else:
            parts[2].append(q)
    return parts


def _matches(cands, t, counts):
    out = []
    for p in cands:
        parts = _partition(cands, t, p)
        if (len(parts[0]), len(parts[1]), len(parts[2])) == counts:
            out.append((p, parts))
    return out


def _interior(points: Iterable[Point], t: Sequence[Point]) -> list[Point]:
    a, b, c = t
    s = _orient(a, b, c)
    if s == 0:
        raise DegenerateError(f"degenerate triangle {tuple(t)}")
    return [p for p in points if _inside(p, a, b, c, s)]


def _check_counts(counts, ncand):
    counts = tuple(counts)
    if len(counts) != 3 or min(counts) < 0 or sum(counts) + 1 != ncand:
        raise ValueError(f"malformed counts {counts} for {ncand} candidates")
    return counts


def apex_candidates(X: Iterable[Sequence[int]], t: Sequence[Sequence[int]], counts: Sequence[int]) -> list[Point]:
    """Every candidate point matching ``counts`` (never more than one)."""
    t = tuple(Point(*q) for q in t)
    cands = _interior((Point(*q) for q in X), t)
    counts = _check_counts(counts, len(cands))
    return [p for p, _ in _matches(cands, t, counts)]


def place_apex(X: Iterable[Sequence[int]], t: Sequence[Sequence[int]], counts: Sequence[int]) -> Optional[Point]:
    """The point of ``X`` inside ``t`` whose sub-triangles ``(t2, t3, p)``,
    ``(t1, t3, p)``, ``(t1, t2, p)`` hold ``counts`` points, or ``None``."""
    found = apex_candidates(X, t, counts)
    if len(found) > 1:
        raise AssertionError(f"apex not unique: {found}")
    return found[0] if found else None


# fixed outer mapping --------------------------------------------------------


def _validate(g: TriTree, X: PointSet) -> tuple[Point, Point, Point]:
    if len(X) != g.n:
        raise SizeMismatch(f"graph has {g.n} vertices, point set has {len(X)}")
    if not X.general_position:
        raise DegenerateError("point set not in general position")
    hull = hull_triangle(X.points)
    if hull is None:
        raise HullNotTriangle("convex hull is not a triangle")
    return hull


def _as_pointset(X) -> PointSet:
    return X if isinstance(X, PointSet) else PointSet.of(X)


def _greedy(g: TriTree, X: PointSet, m: Sequence[Point]) -> Optional[dict]:
    m = tuple(Point(*p) for p in m)
    cands0 = [p for p in X.points if p not in m]
    pos = {0: m[0], 1: m[1], 2: m[2]}
    stack = [(face_tree(g).root, m, cands0)]
    while stack:
        node, tri, cands = stack.pop()
        if node.is_leaf():
            if cands:
                return None
            continue
        found = _matches(cands, tri, node.counts)
        if not found:
            return None
        (p, parts), = found
        pos[node.apex] = p
        a, b, c = tri
        for child, sub, part in zip(node.children, ((b, c, p), (a, c, p), (a, b, p)), parts):
            stack.append((child, sub, part))
    return pos


def decide_embed_fixed(g: TriTree, X, m: Sequence[Sequence[int]]) -> Optional[EmbedWitness]:
    """Embed ``g`` on ``X`` with outer vertices ``0, 1, 2`` sent to ``m``.

    ``m`` must be the hull triangle of ``X`` in some order.
    """
    X = _as_pointset(X)
    hull = _validate(g, X)
    if len(m) != 3 or set(map(tuple, m)) != set(hull):
        raise MappingNotHull("outer mapping must be onto the hull triangle")
    pos = _greedy(g, X, m)
    return None if pos is None else EmbedWitness(pos)


# free mapping ------------------------------------------------------------------


@dataclass(frozen=True)
class FreeEmbedding:
    face: tuple[int, int, int]
    mapping: tuple[Point, Point, Point]
    witness: EmbedWitness


def decide_embed_free(g: TriTree, X) -> Optional[FreeEmbedding]:
    """Try every face of ``g`` on the hull under all six bijections.

    Faces are tried in creation order, bijections in lexicographic order.
    A point set whose hull is not a triangle hosts no triangulation on
    four or more points, so the answer is ``None``.
    """
    X = _as_pointset(X)
    if len(X) != g.n:
        raise SizeMismatch(f"graph has {g.n} vertices, point set has {len(X)}")
    if not X.general_position:
        raise DegenerateError("point set not in general position")
    hull = hull_triangle(X.points)
    if hull is None:
        return None
    for face in g.faces():
        r = reroot(g, face)
        for perm in permutations(hull):
            pos = _greedy(r, X, perm)
            if pos is not None:
                w = EmbedWitness({r.labels[v]: p for v, p in pos.items()})
                return FreeEmbedding(tuple(face), tuple(perm), w)  # type: ignore[arg-type]
    return None


# brute force oracle ----------------------------------------------------------


def brute_embed_witness(g: TriTree, X, fixed: Optional[dict] = None) -> Optional[dict]:
    """Exhaustive search over injective vertex-to-point maps.

    Partial assignments are pruned as soon as two placed edges cross, which
    keeps the search exact.  ``fixed`` pins some vertices to given points.
    """
    pts = [Point(*p) for p in (X.points if isinstance(X, PointSet) else X)]
    n = g.n
    if n != len(pts):
        raise SizeMismatch(f"graph has {n} vertices, point set has {len(pts)}")
    if n > BRUTE_MAX:
        raise EmbedError(f"brute force limited to {BRUTE_MAX} vertices")
    fixed = {v: Point(*p) for v, p in (fixed or {}).items()}
    earlier = [[u for u in g.neighbors(v) if u < v] for v in range(n)]
    pos: dict[int, Point] = {}
    placed: list[tuple[Point, Point]] = []
    used: set[Point] = set()

    def rec(v: int) -> bool:
        if v == n:
            return True
        choices = [fixed[v]] if v in fixed else pts
        for p in choices:
            if p in used:
                continue
            new = [(pos[u], p) for u in earlier[v]]
            if any(segments_cross(s, e) for s in new for e in placed):
                continue
            pos[v] = p
            used.add(p)
            placed.extend(new)
            if rec(v + 1):
                return True
            del placed[len(placed) - len(new):]
            used.discard(p)
            del pos[v]
        return False

    return dict(pos) if rec(0) else None


def brute_embed(g: TriTree, X, fixed: Optional[dict] = None) -> bool:
    return brute_embed_witness(g, X, fixed) is not None


# gadget families -------------------------------------------------------------


def gadget_lemma_check(family: Sequence, X, m: Sequence[Sequence[int]]) -> tuple[int, list[bool]]:
    """How many gadgets embed on ``X`` with ``a, b, c`` sent to ``m``."""
    bits = [decide_embed_fixed(g.tree if hasattr(g, "tree") else g, X, m) is not None for g in family]
    return sum(bits), bits


# fast counting over many graphs ------------------------------------------------


class ShapeTable:
    """Interned rooted shapes of stacked triangulations.

    Shape 0 is the empty face; shape ``s > 0`` has children
    ``children[s]`` and child interior sizes ``counts[s]``.  A graph
    rooted at an ordered face reduces to one shape id, so equal sub-shapes
    across many graphs share embeddability results.
    """

    def __init__(self) -> None:
        self._ids: dict[tuple[int, int, int], int] = {}
        self.children: list[tuple[int, int, int]] = [(0, 0, 0)]
        self.size: list[int] = [0]
        self.counts: list[tuple[int, int, int]] = [(0, 0, 0)]
        self._perm_memo: dict[tuple[int, tuple[int, int, int]], int] = {}

    def intern(self, kids: tuple[int, int, int]) -> int:
        sid = self._ids.get(kids)
        if sid is None:
            sid = len(self.children)
            self._ids[kids] = sid
            self.children.append(kids)
            cnt = (self.size[kids[0]], self.size[kids[1]], self.size[kids[2]])
            self.counts.append(cnt)
            self.size.append(1 + sum(cnt))
        return sid

    def rooted(self, adj: Sequence[set], face: Sequence[int], memo: Optional[dict] = None) -> int:
        """Shape of the graph rooted at the ordered face ``face``."""
        u, v, w = face
        common = adj[u] & adj[v] & adj[w]
        if not common:
            return 0
        (d,) = common
        return self._build(adj, u, v, w, d, {} if memo is None else memo)

    def _build(self, adj, u, v, w, d, memo) -> int:
        key = (u, v, w, d)
        sid = memo.get(key)
        if sid is not None:
            return sid
        kids = []
        for a, b, out in ((v, w, u), (u, w, v), (u, v, w)):
            inner = (adj[a] & adj[b] & adj[d]) - {out}
            if inner:
                (e,) = inner
                kids.append(self._build(adj, a, b, d, e, memo))
            else:
                kids.append(0)
        sid = memo[key] = self.intern(tuple(kids))  # type: ignore[arg-type]
        return sid

    def permuted(self, sid: int, perm: tuple[int, int, int]) -> int:
        """Shape of the same rooted graph with its root corners reordered:
        new corner ``i`` is old corner ``perm[i]``."""
        if sid == 0 or perm == (0, 1, 2):
            return sid
        key = (sid, perm)
        out = self._perm_memo.get(key)
        if out is None:
            old = self.children[sid]
            kids = []
            for i in range(3):
                rest = [perm[k] for k in range(3) if k != i]
                sub = (0, 1, 2) if rest[0] < rest[1] else (1, 0, 2)
                kids.append(self.permuted(old[perm[i]], sub))
            out = self._perm_memo[key] = self.intern(tuple(kids))  # type: ignore[arg-type]
        return out

    def all_rootings(self, g: TriTree) -> frozenset[int]:
        """Shape ids of ``g`` over every face and every corner order."""
        adj = g.adjacency()
        memo: dict = {}
        out = set()
        for face in g.faces():
            sid = self.rooted(adj, face, memo)
            for perm in permutations(range(3)):
                out.add(self.permuted(sid, perm))  # type: ignore[arg-type]
        return frozenset(out)

    def by_counts(self, sids: Iterable[int]) -> dict[tuple[int, int, int], list[int]]:
        """Group shape ids by the child sizes at their root."""
        out: dict[tuple[int, int, int], list[int]] = {}
        for s in sorted(sids):
            out.setdefault(self.counts[s], []).append(s)
        return out


class PointIndex:
    """Per-point-set memo of forced apex positions and shape verdicts."""

    def __init__(self, X: PointSet, shapes: ShapeTable):
        self.points = list(X.points)
        self.shapes = shapes
        pts = self.points
        n = len(pts)
        self.ori = [[[_orient(pts[i], pts[j], pts[k]) for k in range(n)] for j in range(n)] for i in range(n)]
        hull = hull_triangle(pts) if n >= 3 else None
        self.hull = None if hull is None else tuple(pts.index(p) for p in hull)
        self._interior: dict[tuple[int, int, int], list[int]] = {}
        self._apex: dict[tuple[int, int, int], dict] = {}
        self._memo: dict[tuple[int, tuple[int, int, int]], bool] = {}

    def interior(self, tri: tuple[int, int, int]) -> list[int]:
        key = tuple(sorted(tri))
        res = self._interior.get(key)
        if res is None:
            i, j, k = key
            o = self.ori
            s = o[i][j][k]
            res = [q for q in range(len(self.points)) if o[i][j][q] == s and o[j][k][q] == s and o[k][i][q] == s]
            self._interior[key] = res
        return res

    def apex_table(self, tri: tuple[int, int, int]) -> dict:
        table = self._apex.get(tri)
        if table is None:
            i, j, k = tri
            table = {}
            for p in self.interior(tri):
                cnt = (len(self.interior((j, k, p))), len(self.interior((i, k, p))), len(self.interior((i, j, p))))
                table[cnt] = p
            self._apex[tri] = table
        return table

    def embeddable(self, sid: int, tri: tuple[int, int, int]) -> bool:
        if sid == 0:
            return not self.interior(tri)
        key = (sid, tri)
        res = self._memo.get(key)
        if res is None:
            sh = self.shapes
            if sh.size[sid] != len(self.interior(tri)):
                res = False
            else:
                p = self.apex_table(tri).get(sh.counts[sid])
                if p is None:
                    res = False
                else:
                    i, j, k = tri
                    c1, c2, c3 = sh.children[sid]
                    res = (
                        self.embeddable(c1, (j, k, p))
                        and self.embeddable(c2, (i, k, p))
                        and self.embeddable(c3, (i, j, p))
                    )
            self._memo[key] = res
        return res

    def any_embeddable(self, sids: Iterable[int]) -> bool:
        if self.hull is None:
            return False
        h = self.hull
        return any(self.embeddable(s, h) for s in sids)

    def any_embeddable_grouped(self, groups: dict) -> bool:
        """Like :meth:`any_embeddable` for the output of :meth:`ShapeTable.by_counts`;
        only shapes whose root sizes match a hull apex are examined."""
        if self.hull is None:
            return False
        h = self.hull
        for cnt in self.apex_table(h):
            for s in groups.get(cnt, ()):
                if self.embeddable(s, h):
                    return True
        return False


def simultaneous_count(members: Iterable[TriTree], X, shapes: Optional[ShapeTable] = None) -> tuple[int, list[int]]:
    """Number of members embeddable on ``X`` (free mapping) and their positions
    in the input order."""
    X = _as_pointset(X)
    shapes = shapes or ShapeTable()
    idx = PointIndex(X, shapes)
    hits = []
    for i, g in enumerate(members):
        if g.n != len(X):
            raise SizeMismatch(f"member {i} has {g.n} vertices, point set has {len(X)}")
        if g.n == 3:
            hits.append(i)
        elif idx.any_embeddable_grouped(shapes.by_counts(shapes.all_rootings(g))):
            hits.append(i)
    return len(hits), hits


def count_rootings(groups: Sequence[dict], X, shapes: ShapeTable) -> tuple[int, list[int]]:
    """:func:`simultaneous_count` on precomputed, grouped rootings
    (``shapes.by_counts(shapes.all_rootings(g))`` per member)."""
    idx = PointIndex(_as_pointset(X), shapes)
    hits = [i for i, gr in enumerate(groups) if idx.any_embeddable_grouped(gr)]
    return len(hits), hits


# drawings -----------------------------------------------------------------------


def random_drawing(g: TriTree, rng, extent: int = 1 << 20, attempts: int = 100) -> EmbedWitness:
    """A plane drawing of ``g`` on integer points: the outer face goes to
    ``(0, 0), (extent, 0), (0, extent)`` and every apex to a random point of
    its parent triangle.  ``rng`` is a numpy ``Generator``."""
    corners = (Point(0, 0), Point(extent, 0), Point(0, extent))
    for _ in range(attempts):
        pos = dict(enumerate(corners))
        for d, (u, v, w) in g.program:
            tri = (pos[u], pos[v], pos[w])
            wts = [int(x) for x in rng.integers(1, 1000, size=3)]
            s = sum(wts)
            p = Point(sum(k * q.x for k, q in zip(wts, tri)) // s, sum(k * q.y for k, q in zip(wts, tri)) // s)
            sign = _orient(*tri)
            if sign == 0 or not _inside(p, *tri, sign):
                break
            pos[d] = p
        else:
            if general_position(pos.values()):
                return EmbedWitness(pos)
    raise EmbedError(f"no drawing found in {attempts} attempts; raise extent")


# rendering -----------------------------------------------------------------------


def render_svg(g: TriTree, w: EmbedWitness, size: int = 600, margin: int = 20) -> str:
    """Static SVG drawing of the witness (y axis pointing up)."""
    pts = [w.pos[v] for v in range(g.n)]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (size - 2 * margin) / span

    def tr(p):
        return margin + (p.x - min(xs)) * scale, size - margin - (p.y - min(ys)) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<g stroke="#333" stroke-width="1">',
    ]
    for u, v in g.edges():
        (x1, y1), (x2, y2) = tr(pts[u]), tr(pts[v])
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")
    out.append('<g fill="#c22">')
    for v, p in enumerate(pts):
        x, y = tr(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3"><title>{g.labels[v]}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

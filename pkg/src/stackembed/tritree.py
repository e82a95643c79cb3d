"""Planar 3-trees stored as stacking programs.

A :class:`TriTree` starts from an outer triangle ``(0, 1, 2)`` and records
every split of a facial triangle by a new degree-3 vertex.  When a face
``(u, v, w)`` is split by ``d`` it is replaced by the ordered faces
``(v, w, d)``, ``(u, w, d)`` and ``(u, v, d)``; the face opposite the
i-th corner comes i-th.  That ordering is what :func:`face_tree` reports.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence


class TriTreeError(ValueError):
    pass


class FaceNotPresent(TriTreeError):
    pass


class NotA3Tree(TriTreeError):
    pass


def _key(face: Iterable[int]) -> tuple[int, int, int]:
    return tuple(sorted(face))  # type: ignore[return-value]


def split_faces(face: Sequence[int], d: int) -> tuple[tuple[int, int, int], ...]:
    u, v, w = face
    return (v, w, d), (u, w, d), (u, v, d)


class TriTree:
    """A planar 3-tree built by successive face splits.

    Vertex ids are ``0..n-1``; the outer face is ``(0, 1, 2)``.
    ``program[i]`` is ``(i + 3, parent_face)`` with ``parent_face`` in the
    stored orientation of that face.
    """

    def __init__(self, labels: Sequence[Hashable] = ("a", "b", "c")):
        if len(labels) != 3:
            raise TriTreeError("root needs exactly 3 labels")
        self.labels: list[Hashable] = list(labels)
        self.program: list[tuple[int, tuple[int, int, int]]] = []
        self._faces: dict[tuple[int, int, int], tuple[int, int, int]] = {(0, 1, 2): (0, 1, 2)}
        self._adj: list[set[int]] = [{1, 2}, {0, 2}, {0, 1}]

    # construction -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def outer(self) -> tuple[int, int, int]:
        return (0, 1, 2)

    def stack(self, face: Sequence[int], label: Optional[Hashable] = None) -> int:
        """Split ``face`` with a new vertex and return the new id."""
        key = _key(face)
        stored = self._faces.pop(key, None)
        if stored is None:
            raise FaceNotPresent(f"face not present: {tuple(face)}")
        d = self.n
        self.labels.append(label if label is not None else d)
        self._adj.append(set(stored))
        for u in stored:
            self._adj[u].add(d)
        for f in split_faces(stored, d):
            self._faces[_key(f)] = f
        self.program.append((d, stored))
        return d

    def copy(self) -> "TriTree":
        t = TriTree.__new__(TriTree)
        t.labels = list(self.labels)
        t.program = list(self.program)
        t._faces = dict(self._faces)
        t._adj = [set(s) for s in self._adj]
        return t

    # queries ----------------------------------------------------------

    def stackable_faces(self) -> list[tuple[int, int, int]]:
        """Current inner faces, in their stored orientation."""
        return list(self._faces.values())

    def faces(self) -> list[tuple[int, int, int]]:
        """All ``2n - 4`` faces: the outer face first, then inner faces in
        creation order.  A bare triangle has the single face ``(0, 1, 2)``.
        """
        if not self.program:
            return [(0, 1, 2)]
        return [(0, 1, 2)] + self.stackable_faces()

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacency(self) -> list[frozenset[int]]:
        return [frozenset(s) for s in self._adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def label_of(self, v: int) -> Hashable:
        return self.labels[v]

    def __repr__(self) -> str:
        return f"TriTree(n={self.n}, program={len(self.program)} splits)"

    # text format -------------------------------------------------------

    def to_text(self) -> str:
        """``outer: a b c`` followed by one ``v: p q r`` line per split."""
        lab = [str(x) for x in self.labels]
        lines = ["outer: " + " ".join(lab[:3])]
        for d, (p, q, r) in self.program:
            lines.append(f"{lab[d]}: {lab[p]} {lab[q]} {lab[r]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TriTree":
        return parse_stacking(text.splitlines())


def new_root(labels: Sequence[Hashable] = ("a", "b", "c")) -> TriTree:
    return TriTree(labels)


def parse_stacking(lines: Iterable[str]) -> TriTree:
    """Parse the stacking text format (blank lines and ``#`` comments ignored)."""
    tree: Optional[TriTree] = None
    ids: dict[str, int] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise TriTreeError(f"line {lineno}: expected 'name: x y z'")
        names = rest.split()
        if len(names) != 3:
            raise TriTreeError(f"line {lineno}: expected three vertex names")
        head = head.strip()
        if tree is None:
            if head != "outer":
                raise TriTreeError(f"line {lineno}: first line must be 'outer: a b c'")
            if len(set(names)) != 3:
                raise TriTreeError(f"line {lineno}: repeated outer vertex")
            tree = TriTree(names)
            ids = {s: i for i, s in enumerate(names)}
            continue
        if head in ids:
            raise TriTreeError(f"line {lineno}: vertex {head!r} defined twice")
        try:
            face = [ids[s] for s in names]
        except KeyError as e:
            raise TriTreeError(f"line {lineno}: unknown vertex {e.args[0]!r}") from None
        try:
            ids[head] = tree.stack(face, head)
        except FaceNotPresent:
            raise TriTreeError(f"line {lineno}: face not present: {' '.join(names)}") from None
    if tree is None:
        raise TriTreeError("empty stacking program")
    return tree


# recognition --------------------------------------------------------------


def recognize(adjacency, outer: Sequence[Hashable]) -> TriTree:
    """Recover a stacking program rooted at the triangle ``outer``.

    ``adjacency`` maps each vertex to its neighbours (a dict or a list of
    neighbour sets).  Degree-3 vertices whose neighbourhood is a triangle
    are peeled, lowest id first, and the removal order is replayed
    backwards.  Labels of the result are the input vertex names.
    """
    adj = {v: set(nb) for v, nb in (adjacency.items() if isinstance(adjacency, dict) else enumerate(adjacency))}
    for v, nb in adj.items():
        if v in nb or any(v not in adj[u] for u in nb):
            raise NotA3Tree("adjacency is not simple and symmetric")
    outer = tuple(outer)
    if len(set(outer)) != 3 or any(v not in adj for v in outer):
        raise NotA3Tree("outer must be three distinct vertices")
    a, b, c = outer
    if b not in adj[a] or c not in adj[a] or c not in adj[b]:
        raise NotA3Tree("not a planar 3-tree on this root: outer is not a triangle")

    remaining = {v: set(nb) for v, nb in adj.items()}
    pinned = set(outer)
    order: list[tuple[Hashable, tuple]] = []

    def peelable(v) -> bool:
        if v in pinned or len(remaining[v]) != 3:
            return False
        p, q, r = remaining[v]
        return q in remaining[p] and r in remaining[p] and r in remaining[q]

    key = {v: i for i, v in enumerate(_sorted_names(remaining))}
    heap = [(key[v], v) for v in remaining if peelable(v)]
    heapq.heapify(heap)
    while heap:
        _, v = heapq.heappop(heap)
        if v not in remaining or not peelable(v):
            continue
        nb = remaining.pop(v)
        order.append((v, tuple(nb)))
        for u in nb:
            remaining[u].discard(v)
            if peelable(u):
                heapq.heappush(heap, (key[u], u))
    if set(remaining) != pinned:
        raise NotA3Tree("not a planar 3-tree on this root")

    tree = TriTree(list(outer))
    ids = {a: 0, b: 1, c: 2}
    for v, nb in reversed(order):
        try:
            ids[v] = tree.stack([ids[u] for u in nb], v)
        except FaceNotPresent:
            raise NotA3Tree("not a planar 3-tree on this root") from None
    return tree


def _sorted_names(vertices) -> list:
    try:
        return sorted(vertices)
    except TypeError:
        return sorted(vertices, key=repr)


# face tree ----------------------------------------------------------------


@dataclass
class FaceNode:
    face: tuple[int, int, int]
    apex: Optional[int] = None
    children: tuple["FaceNode", ...] = ()
    interior_count: int = 0

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(ch.interior_count for ch in self.children)

    def is_leaf(self) -> bool:
        return self.apex is None


@dataclass
class FaceTree:
    root: FaceNode
    nodes: list[FaceNode] = field(default_factory=list)

    def leaves(self) -> list[FaceNode]:
        return [nd for nd in self.nodes if nd.is_leaf()]

    def splits(self) -> list[FaceNode]:
        return [nd for nd in self.nodes if not nd.is_leaf()]


def face_tree(t: TriTree) -> FaceTree:
    """Split hierarchy of ``t``: every split node has three children in
    the order ``(v, w, d), (u, w, d), (u, v, d)``."""
    root = FaceNode(t.outer)
    live = {_key(root.face): root}
    nodes = [root]
    for d, parent in t.program:
        node = live.pop(_key(parent))
        node.apex = d
        kids = tuple(FaceNode(f) for f in split_faces(node.face, d))
        node.children = kids
        for k in kids:
            live[_key(k.face)] = k
        nodes.extend(kids)
    # interior counts bottom-up: children are always appended after parents
    for node in reversed(nodes):
        if node.children:
            node.interior_count = 1 + sum(k.interior_count for k in node.children)
    return FaceTree(root, nodes)


def reroot(t: TriTree, face: Sequence[int]) -> TriTree:
    """``t`` recognized from another face; vertex labels are the ids of ``t``."""
    return recognize(t.adjacency(), face)

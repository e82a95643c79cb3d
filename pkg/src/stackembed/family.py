"""Skeleton graphs and the planted families built on them.

Skeleton vertex ids: ``x, y, z = 0, 1, 2``, ``w = 3``, then the alpha,
beta and gamma fans in stacking order.  Gadget-internal vertices follow,
face by face in the canonical face order.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional

from .gadgets import GadgetCatalog
from .tritree import TriTree

MIN_N = 22
N_SEVEN = 7
N_THREE = 3


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Skeleton:
    k: tuple[int, int, int]
    tree: TriTree = field(compare=False)
    f_faces: tuple[tuple[int, int, int], ...]
    exceptional: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class FamilySpec:
    n: int
    k1: int
    k2: int
    k3: int
    F: int
    F1: int
    F2: int
    f_order: tuple[tuple[int, int, int], ...]
    f2_set: tuple[tuple[int, int, int], ...]

    @property
    def k(self) -> tuple[int, int, int]:
        return (self.k1, self.k2, self.k3)

    @property
    def f1_faces(self) -> tuple[tuple[int, int, int], ...]:
        return self.f_order[self.F2:]

    def to_json(self) -> str:
        d = asdict(self)
        d["f_order"] = [list(f) for f in self.f_order]
        d["f2_set"] = [list(f) for f in self.f2_set]
        d["family_size"] = str(family_size(self))
        return json.dumps(d, indent=2)


def _split_sum(s: int) -> tuple[int, int, int]:
    q, r = divmod(s, 3)
    return (q, q + (r >= 2), q + (r >= 1))


def build_skeleton(k1: int, k2: int, k3: int) -> Skeleton:
    """The skeleton ``B_{k1,k2,k3}`` with its face order.

    ``w`` splits ``(x, y, z)``; the region ``(y, w, z)`` receives a fan of
    ``k1`` vertices each splitting ``(prev, y, z)``, and likewise for the
    regions ``(z, w, x)`` and ``(x, w, y)``.
    """
    if min(k1, k2, k3) < 0:
        raise FamilyError("region sizes must be non-negative")
    t = TriTree(["x", "y", "z"])
    w = t.stack((0, 1, 2), "w")
    f_faces: list[tuple[int, int, int]] = []
    last = {}
    regions = (("alpha", k1, 1, 2), ("beta", k2, 2, 0), ("gamma", k3, 0, 1))
    for name, k, p, q in regions:
        # region (p, w, q); p-side faces listed before q-side faces
        prev = w
        for i in range(1, k + 1):
            face = (p, w, q) if i == 1 else (prev, p, q)
            v = t.stack(face, f"{name}{i}")
            f_faces.append((prev, v, p))
            f_faces.append((prev, v, q))
            prev = v
        last[name] = prev
    exceptional = (
        (0, 1, 2),
        (0, 1, last["gamma"]),
        (last["alpha"], 1, 2),
        (0, last["beta"], 2),
    )
    return Skeleton((k1, k2, k3), t, tuple(f_faces), exceptional)


def family_parameters(n: int) -> FamilySpec:
    if n < MIN_N:
        raise FamilyError(f"n={n} is below construction range (n >= {MIN_N})")
    F2 = (7 * n + 5) % 11
    ksum, rem = divmod(n - 4 + 3 * F2, 11)
    assert rem == 0
    k1, k2, k3 = _split_sum(ksum)
    F = 2 * ksum + 4
    F1 = F - 4 - F2
    if F1 < 0:
        raise FamilyError(f"n={n}: negative F1")
    sk = build_skeleton(k1, k2, k3)
    return FamilySpec(n, k1, k2, k3, F, F1, F2, sk.f_faces, sk.f_faces[:F2])


def family_size(spec: FamilySpec) -> int:
    return N_SEVEN**spec.F1 * N_THREE**spec.F2


def decode_index(spec: FamilySpec, index: int) -> tuple[list[int], list[int]]:
    """Mixed-radix digits, most significant first: F1 base-7 digits for
    the first-family faces, then F2 base-3 digits."""
    if not 0 <= index < family_size(spec):
        raise FamilyError(f"index {index} out of range")
    three = []
    for _ in range(spec.F2):
        index, r = divmod(index, N_THREE)
        three.append(r)
    seven = []
    for _ in range(spec.F1):
        index, r = divmod(index, N_SEVEN)
        seven.append(r)
    return seven[::-1], three[::-1]


def encode_index(spec: FamilySpec, seven: list[int], three: list[int]) -> int:
    index = 0
    for d in seven:
        index = index * N_SEVEN + d
    for d in three:
        index = index * N_THREE + d
    return index


def plant(tree: TriTree, face: tuple[int, int, int], gadget_tree: TriTree, outer_ids: tuple[int, int, int]) -> None:
    """Glue ``gadget_tree`` into ``face`` of ``tree`` in place.

    ``outer_ids`` are the host vertices for the gadget's ``a, b, c``.
    """
    ren = dict(zip((0, 1, 2), outer_ids))
    for d, f in gadget_tree.program:
        ren[d] = tree.stack([ren[u] for u in f], None)


def _outer_roles(face: tuple[int, int, int]) -> tuple[int, int, int]:
    # c goes to the single skeleton-outer vertex, a and b keep stored order
    (c,) = [v for v in face if v < 3]
    a, b = [v for v in face if v >= 3]
    return a, b, c


_skeleton_cache: dict[tuple[int, int, int], Skeleton] = {}


def skeleton_for(spec: FamilySpec) -> Skeleton:
    sk = _skeleton_cache.get(spec.k)
    if sk is None:
        sk = _skeleton_cache[spec.k] = build_skeleton(*spec.k)
    return sk


def graph_from_digits(spec: FamilySpec, catalog: GadgetCatalog, seven: list[int], three: list[int]) -> TriTree:
    t = skeleton_for(spec).tree.copy()
    choice = {}
    for face, d in zip(spec.f2_set, three):
        choice[face] = catalog.three[d]
    for face, d in zip(spec.f1_faces, seven):
        choice[face] = catalog.seven[d]
    for face in spec.f_order:
        plant(t, face, choice[face].tree, _outer_roles(face))
    return t


def graph_at(spec: FamilySpec, catalog: GadgetCatalog, index: int) -> TriTree:
    """Member ``index`` of the family (see :func:`decode_index`)."""
    seven, three = decode_index(spec, index)
    return graph_from_digits(spec, catalog, seven, three)


def enumerate_family(spec: FamilySpec, catalog: GadgetCatalog, start: int = 0, stop: Optional[int] = None) -> Iterator[tuple[int, TriTree]]:
    stop = family_size(spec) if stop is None else stop
    for i in range(start, stop):
        yield i, graph_at(spec, catalog, i)


@dataclass
class DegreeReport:
    outer: dict[str, int]
    skeleton_max: int
    gadget_max: int
    degrees: list[int]

    def separated(self, threshold: int = 30, gadget_cap: int = 7) -> bool:
        return (
            min(self.outer.values()) > threshold
            and self.skeleton_max <= threshold
            and self.gadget_max <= gadget_cap
        )


def degree_report(g: TriTree, spec: FamilySpec) -> DegreeReport:
    nskel = sum(spec.k) + 4
    deg = [g.degree(v) for v in range(g.n)]
    return DegreeReport(
        outer={"x": deg[0], "y": deg[1], "z": deg[2]},
        skeleton_max=max(deg[3:nskel]),
        gadget_max=max(deg[nskel:], default=0),
        degrees=deg,
    )

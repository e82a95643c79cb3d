"""Canonical forms of small graphs by colour refinement plus backtracking.

Two graphs get the same form iff they are isomorphic (respecting the
optional vertex colouring).  Forms are plain ``bytes`` so they hash, sort
and serialise identically everywhere.
"""

from __future__ import annotations

import csv
from collections import Counter
from typing import Iterable, Optional, Sequence

MAX_VERTICES = 64


def _as_lists(adjacency) -> tuple[list[Sequence], list[list[int]]]:
    if isinstance(adjacency, dict):
        try:
            names = sorted(adjacency)
        except TypeError:
            names = sorted(adjacency, key=repr)
    else:
        adjacency = list(adjacency)
        names = list(range(len(adjacency)))
    index = {v: i for i, v in enumerate(names)}
    nbrs = [sorted(index[u] for u in adjacency[v]) for v in names]
    return names, nbrs


def _refine(colors: list[int], nbrs: list[list[int]]) -> list[int]:
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        k = len(rank)
        if k == ncls:
            return colors
        ncls = k


def _certificate(colors: list[int], base: list[int], nbrs: list[list[int]]) -> bytes:
    n = len(colors)
    pos = colors  # discrete: colour == canonical position
    order = [0] * n
    for v, c in enumerate(pos):
        order[c] = v
    bits = 0
    for i, v in enumerate(order):
        for u in nbrs[v]:
            j = pos[u]
            if j > i:
                bits |= 1 << (j * (j - 1) // 2 + i)
    nbytes = (n * (n - 1) // 2 + 7) // 8
    head = n.to_bytes(2, "big") + bytes(min(base[v], 255) for v in order)
    return head + bits.to_bytes(nbytes, "big")


def _canon(nbrs: list[list[int]], base: list[int]) -> bytes:
    n = len(nbrs)
    if n > MAX_VERTICES:
        raise ValueError(f"graph too large for canonical form ({n} > {MAX_VERTICES})")
    best: Optional[bytes] = None
    stack = [_refine(list(base), nbrs)]
    while stack:
        colors = stack.pop()
        sizes = Counter(colors)
        target = min((c for c, s in sizes.items() if s > 1), default=None)
        if target is None:
            cert = _certificate(colors, base, nbrs)
            if best is None or cert < best:
                best = cert
            continue
        for v in reversed([u for u in range(n) if colors[u] == target]):
            ind = [2 * c + (c == target and u != v) for u, c in enumerate(colors)]
            stack.append(_refine(ind, nbrs))
    assert best is not None or n == 0
    return best if best is not None else b"\x00\x00"


def canonical_form(adjacency, colors: Optional[Sequence[int]] = None) -> bytes:
    """Canonical byte string of a graph given as neighbour sets.

    ``colors`` (small non-negative ints, one per vertex in adjacency order)
    restricts isomorphisms to colour-preserving ones.
    """
    names, nbrs = _as_lists(adjacency)
    base = [0] * len(names) if colors is None else list(colors)
    if len(base) != len(names):
        raise ValueError("one colour per vertex required")
    return _canon(nbrs, base)


def canonical_form_rooted(adjacency, pinned: Sequence, classes: Optional[Sequence[int]] = None) -> bytes:
    """Form invariant under isomorphisms fixing each pinned vertex.

    ``classes`` lets pinned vertices share a colour, e.g. ``(0, 0, 1)``
    allows swapping the first two.
    """
    names, nbrs = _as_lists(adjacency)
    index = {v: i for i, v in enumerate(names)}
    classes = range(len(pinned)) if classes is None else classes
    base = [0] * len(names)
    for v, k in zip(pinned, classes):
        base[index[v]] = 1 + k
    return b"R" + _canon(nbrs, base)


def iso_histogram(graphs: Iterable) -> Counter:
    """Class sizes keyed by canonical form.

    Items may be adjacency structures or objects with ``adjacency()``.
    """
    hist: Counter = Counter()
    for g in graphs:
        adj = g.adjacency() if hasattr(g, "adjacency") else g
        hist[canonical_form(adj)] += 1
    return hist


def write_histogram_csv(hist: Counter, fh) -> None:
    """Rows ``form_hex,count`` sorted by descending count then form."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["form", "count"])
    for form, cnt in sorted(hist.items(), key=lambda kv: (-kv[1], kv[0])):
        w.writerow([form.hex(), cnt])

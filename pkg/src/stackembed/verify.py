"""Property suites behind ``stackembed verify`` and ``stackembed conflict``.

Each suite returns a JSON-ready report with at least the keys ``check``,
``n``, ``trials``, ``skipped``, ``violations``, ``max_embeddable`` and
``seed``.  Violations carry enough data to reproduce them.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from typing import Iterator, Optional

import numpy as np

from .bounds import bounds_report
from .embed import (
    ShapeTable,
    _partition,
    apex_candidates,
    brute_embed,
    count_rootings,
    decide_embed_fixed,
    decide_embed_free,
    gadget_lemma_check,
)
from .family import degree_report, enumerate_family, family_parameters, family_size, graph_at
from .gadgets import FAMILY_SEVEN, FAMILY_THREE, GadgetCatalog, default_catalog, flip
from .geom import PointSet
from .pointsets import TRIANGULAR, UNCONSTRAINED, SamplerConfig, load_order_types, sample, trial_rng
from .tritree import TriTree

MAX_EXAMPLES = 10
ENUMERATION_CAP = 10_000


class EnumerationCapError(ValueError):
    pass


def _report(check: str, n: int, trials: int, seed, **extra) -> dict:
    rep = {"check": check, "n": n, "trials": trials, "skipped": 0, "violations": 0, "max_embeddable": 0, "seed": seed}
    rep.update(extra)
    return rep


def _points(X: PointSet) -> list[list[int]]:
    return [[p.x, p.y] for p in X.points]


# gadget families -------------------------------------------------------------


def gadget_lemma(
    family: str = FAMILY_SEVEN,
    trials: int = 1000,
    seed: int = 0,
    extent: int = 1 << 16,
    otypes: Optional[str] = None,
    width: int = 8,
    endian: str = "little",
    limit: Optional[int] = None,
    catalog: Optional[GadgetCatalog] = None,
) -> dict:
    """At most two gadgets of a family embed under any fixed outer mapping.

    Point sets come from the sampler, or from an order-type file when
    ``otypes`` is given (first ``limit`` records; all when ``None``).
    Records whose hull is not a triangle are skipped and counted.
    """
    catalog = catalog or default_catalog()
    fam = catalog.family(family)
    n = fam[0].tree.n
    check = "lemma8" if family == FAMILY_SEVEN else "lemma7"

    if otypes is None:
        sets: Iterator[tuple[int, PointSet]] = (
            (i, sample(SamplerConfig(n, extent, mode=TRIANGULAR), trial_rng(seed, i))) for i in range(trials)
        )
    else:
        recs = load_order_types(otypes, n, width, endian)
        sets = ((i, X) for i, X in enumerate(recs) if limit is None or i < limit)

    rep = _report(check, n, 0, seed if otypes is None else None, source=str(otypes or "sampler"), mappings=0, examples=[])
    for i, X in sets:
        rep["trials"] += 1
        hull = X.hull_triangle()
        if hull is None:
            rep["skipped"] += 1
            continue
        for m in permutations(hull):
            cnt, bits = gadget_lemma_check(fam, X, m)
            rep["mappings"] += 1
            rep["max_embeddable"] = max(rep["max_embeddable"], cnt)
            if cnt > 2:
                rep["violations"] += 1
                if len(rep["examples"]) < MAX_EXAMPLES:
                    rep["examples"].append({"record": i, "points": _points(X), "mapping": [list(p) for p in m], "bits": bits})
    return rep


# apex uniqueness -------------------------------------------------------------


def apex_uniqueness(trials: int = 10_000, seed: int = 0, max_interior: int = 50, extent: int = 1 << 20) -> dict:
    """Random apex instances, every candidate scanned.

    The counts are read off a randomly chosen interior point, so each
    instance has at least one match; a violation is any other match.
    """
    rep = _report("apex", max_interior, 0, seed, examples=[])
    for i in range(trials):
        rng = trial_rng(seed, i)
        k = int(rng.integers(1, max_interior + 1))
        X = sample(SamplerConfig(k + 3, extent, mode=TRIANGULAR), rng)
        t = X.points[:3]
        cands = list(X.points[3:])
        p = cands[int(rng.integers(0, k))]
        counts = tuple(len(s) for s in _partition(cands, t, p))
        found = apex_candidates(X.points, t, counts)
        rep["trials"] += 1
        rep["max_embeddable"] = max(rep["max_embeddable"], len(found))
        if found != [p]:
            rep["violations"] += 1
            if len(rep["examples"]) < MAX_EXAMPLES:
                rep["examples"].append({"trial": i, "points": _points(X), "counts": counts, "found": [list(q) for q in found]})
    return rep


# embedder versus brute force -----------------------------------------------------


def stacking_programs(max_size: int) -> Iterator[TriTree]:
    """Every stacking program (sequence of face choices) on up to ``max_size`` vertices."""
    def rec(t: TriTree):
        yield t
        if t.n < max_size:
            for face in t.stackable_faces():
                c = t.copy()
                c.stack(face)
                yield from rec(c)

    if max_size >= 3:
        yield from rec(TriTree())


def embedder_agreement(max_size: int = 6, sets: int = 50, seed: int = 0, extent: int = 64) -> dict:
    """Compare the greedy deciders with exhaustive search.

    For each program and point set: the free decision against
    :func:`brute_embed`, and on triangular hulls each of the six fixed
    mappings against brute force restricted to that mapping.  One point set
    in four is sampled without the triangular-hull constraint.
    """
    rep = _report("embedder", max_size, 0, seed, comparisons=0, agreements=0, embeddable=0, examples=[])
    for pi, g in enumerate(stacking_programs(max_size)):
        for s in range(sets):
            rng = trial_rng(seed, pi * 100_003 + s)
            mode = UNCONSTRAINED if s % 4 == 3 else TRIANGULAR
            X = sample(SamplerConfig(g.n, extent, mode=mode), rng)
            rep["trials"] += 1
            free = decide_embed_free(g, X)
            brute = brute_embed(g, X)
            pairs = [(free is not None, brute, None)]
            if free is not None:
                pairs.append((free.witness.is_plane(g), True, "witness"))
            hull = X.hull_triangle()
            if hull is not None:
                for m in permutations(hull):
                    w = decide_embed_fixed(g, X, m)
                    b = brute_embed(g, X, dict(zip((0, 1, 2), m)))
                    pairs.append((w is not None, b, [list(p) for p in m]))
            for got, want, ctx in pairs:
                rep["comparisons"] += 1
                if got == want:
                    rep["agreements"] += 1
                else:
                    rep["violations"] += 1
                    if len(rep["examples"]) < MAX_EXAMPLES:
                        rep["examples"].append({"program": g.to_text(), "points": _points(X), "context": ctx, "got": got, "want": want})
            rep["embeddable"] += brute
            rep["max_embeddable"] = max(rep["max_embeddable"], int(brute))
    rep["agreement"] = rep["agreements"] / rep["comparisons"] if rep["comparisons"] else 1.0
    return rep


# degree separation ---------------------------------------------------------------


def degree_separation(n: int = 238, samples: int = 100, seed: int = 0, catalog: Optional[GadgetCatalog] = None) -> dict:
    """Random members: outer degrees above 30, other skeleton degrees at
    most 30, gadget-internal degrees at most 7."""
    catalog = catalog or default_catalog()
    spec = family_parameters(n)
    size = family_size(spec)
    rep = _report("degrees", n, 0, seed, min_outer_degree=None, max_skeleton_degree=0, max_gadget_degree=0, examples=[])
    for i in range(samples):
        rng = trial_rng(seed, i)
        # uniform big-integer index from 64-bit words
        words = rng.integers(0, 2**63, size=(size.bit_length() // 63) + 2, dtype=np.int64)
        index = int("".join(format(int(x), "063b") for x in words), 2) % size
        g = graph_at(spec, catalog, index)
        r = degree_report(g, spec)
        rep["trials"] += 1
        lo = min(r.outer.values())
        rep["min_outer_degree"] = lo if rep["min_outer_degree"] is None else min(rep["min_outer_degree"], lo)
        rep["max_skeleton_degree"] = max(rep["max_skeleton_degree"], r.skeleton_max)
        rep["max_gadget_degree"] = max(rep["max_gadget_degree"], r.gadget_max)
        if not r.separated():
            rep["violations"] += 1
            if len(rep["examples"]) < MAX_EXAMPLES:
                rep["examples"].append({"index": str(index), "outer": r.outer, "skeleton_max": r.skeleton_max, "gadget_max": r.gadget_max})
    return rep


# catalog --------------------------------------------------------------------------


def catalog_check(catalog: Optional[GadgetCatalog] = None) -> dict:
    """Re-run the load-time invariants and report the flip permutations."""
    catalog = catalog or default_catalog()
    rep = _report("catalog", 0, 0, None, families={}, examples=[])
    for name in (FAMILY_SEVEN, FAMILY_THREE):
        fam = catalog.family(name)
        forms = [g.rooted_form() for g in fam]
        try:
            perm = catalog.flip_permutation(name)
        except ValueError:
            perm = None
        nbr = max(max(g.outer_internal_neighbors()) for g in fam)
        info = {
            "gadgets": [g.name for g in fam],
            "vertices": sorted({g.tree.n for g in fam}),
            "faces": sorted({len(g.tree.faces()) for g in fam}),
            "distinct_rooted_forms": len(set(forms)),
            "flip_permutation": perm,
            "max_outer_internal_neighbors": nbr,
            "flip_pairs_match_with_shared_ab": all(
                flip(g).rooted_form(share_ab=True) == g.rooted_form(share_ab=True) for g in fam
            ),
        }
        rep["families"][name] = info
        rep["trials"] += len(fam)
        bad = info["distinct_rooted_forms"] != len(fam) or perm is None or nbr > 4
        if bad:
            rep["violations"] += 1
    return rep


# conflict search ------------------------------------------------------------------


def conflict_search(
    n: int = 22,
    trials: int = 200,
    seed: int = 0,
    extent: int = 1 << 20,
    cap: int = ENUMERATION_CAP,
    catalog: Optional[GadgetCatalog] = None,
) -> dict:
    """Count simultaneously embeddable members over seeded random point sets.

    Each point set has a triangular hull (corners plus interior points).  A
    violation is a count above the exact partition bound.
    """
    catalog = catalog or default_catalog()
    spec = family_parameters(n)
    size = family_size(spec)
    if size > cap:
        raise EnumerationCapError(f"family of size {size} exceeds enumeration cap {cap}")
    bound = bounds_report(n).exact_upper
    rep = _report("conflict", n, trials, seed, family_size=size, exact_upper=bound, histogram={}, argmax_trial=None, argmax_points=None, argmax_members=[])
    if trials <= 0:
        return rep
    shapes = ShapeTable()
    groups = [shapes.by_counts(shapes.all_rootings(g)) for _, g in enumerate_family(spec, catalog)]
    hist: Counter = Counter()
    best = -1
    for i in range(trials):
        X = sample(SamplerConfig(n, extent, mode=TRIANGULAR), trial_rng(seed, i))
        cnt, hits = count_rootings(groups, X, shapes)
        hist[cnt] += 1
        if cnt > bound:
            rep["violations"] += 1
        if cnt > best:
            best = cnt
            rep["argmax_trial"] = i
            rep["argmax_points"] = _points(X)
            rep["argmax_members"] = hits
    rep["max_embeddable"] = best
    rep["histogram"] = {str(k): hist[k] for k in sorted(hist)}
    return rep

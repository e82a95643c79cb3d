import io
import random

import networkx as nx
import pytest

from stackembed.family import family_parameters, graph_at
from stackembed.gadgets import default_catalog
from stackembed.iso import canonical_form, canonical_form_rooted, iso_histogram, write_histogram_csv
from stackembed.verify import stacking_programs


def relabel(adj, perm):
    """``adj`` as a dict with vertex ``v`` renamed ``perm[v]``."""
    return {perm[v]: {perm[u] for u in nb} for v, nb in enumerate(adj)}


def as_lists(graph: nx.Graph):
    return [set(graph[v]) for v in range(graph.number_of_nodes())]


K4 = [{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}]


def test_examples():
    assert canonical_form(K4) == canonical_form(relabel(K4, [2, 0, 3, 1]))
    path = [{1}, {0, 2}, {1}]
    tri = [{1, 2}, {0, 2}, {0, 1}]
    assert canonical_form(path) != canonical_form(tri)
    assert canonical_form([]) == canonical_form({})


def test_member_relabeling():
    g = graph_at(family_parameters(22), default_catalog(), 1234)
    adj = g.adjacency()
    base = canonical_form(adj)
    rng = random.Random(1)
    for _ in range(1000):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(relabel(adj, perm)) == base


def test_regular_graphs_against_networkx():
    # vertex-transitive and regular inputs are where refinement alone stalls
    graphs = [
        nx.cycle_graph(6),
        nx.disjoint_union(nx.cycle_graph(3), nx.cycle_graph(3)),
        nx.petersen_graph(),
        nx.circular_ladder_graph(5),
        nx.moebius_kantor_graph(),
        nx.random_regular_graph(3, 12, seed=1),
        nx.random_regular_graph(3, 12, seed=2),
        nx.hypercube_graph(3),
        nx.complete_bipartite_graph(3, 3),
        nx.circular_ladder_graph(3),
    ]
    graphs = [nx.convert_node_labels_to_integers(h) for h in graphs]
    forms = [canonical_form(as_lists(h)) for h in graphs]
    for i, a in enumerate(graphs):
        for j, b in enumerate(graphs):
            if a.number_of_nodes() == b.number_of_nodes():
                assert (forms[i] == forms[j]) == nx.is_isomorphic(a, b)
    rng = random.Random(0)
    for h, f in zip(graphs, forms):
        perm = list(range(h.number_of_nodes()))
        rng.shuffle(perm)
        assert canonical_form(relabel(as_lists(h), perm)) == f


def test_random_small_graphs_against_networkx():
    rng = random.Random(5)
    pool = [nx.gnm_random_graph(7, rng.randint(6, 12), seed=rng.randint(0, 10**6)) for _ in range(80)]
    forms = [canonical_form(as_lists(h)) for h in pool]
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            assert (forms[i] == forms[j]) == nx.is_isomorphic(pool[i], pool[j])


def test_rooted_forms():
    cat = default_catalog()
    assert len({g.rooted_form() for g in cat.seven}) == 7
    for g in cat.seven:
        plain = canonical_form(g.tree.adjacency())
        for h in cat.seven:
            if g.rooted_form() == h.rooted_form():
                assert canonical_form(h.tree.adjacency()) == plain


def test_rooted_refines_plain():
    progs = stacking_programs(7)
    by_rooted = {}
    for t in progs:
        by_rooted.setdefault(canonical_form_rooted(t.adjacency(), (0, 1, 2)), set()).add(canonical_form(t.adjacency()))
    assert all(len(v) == 1 for v in by_rooted.values())


def test_pinning_everything():
    # with every vertex pinned the only automorphism left is the identity
    path = [{1}, {0, 2}, {1}]
    a = canonical_form_rooted(path, (0, 1, 2))
    b = canonical_form_rooted([{2}, {2}, {0, 1}], (0, 1, 2))
    assert a != b
    assert a == canonical_form_rooted({"x": {"y"}, "y": {"x", "z"}, "z": {"y"}}, ("x", "y", "z"))


def test_size_cap():
    with pytest.raises(ValueError, match="too large"):
        canonical_form([set() for _ in range(65)])


def test_histogram():
    assert iso_histogram([]) == {}
    h = iso_histogram([K4, relabel(K4, [3, 2, 1, 0])])
    assert list(h.values()) == [2]
    buf = io.StringIO()
    write_histogram_csv(iso_histogram([K4, K4, [{1}, {0}]]), buf)
    rows = buf.getvalue().splitlines()
    assert rows[0] == "form,count" and rows[1].endswith(",2") and rows[2].endswith(",1")

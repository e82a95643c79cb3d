import json

import pytest

from stackembed.family import (
    FamilyError,
    build_skeleton,
    decode_index,
    degree_report,
    encode_index,
    enumerate_family,
    family_parameters,
    family_size,
    graph_at,
    skeleton_for,
)
from stackembed.gadgets import default_catalog
from stackembed.tritree import recognize


@pytest.mark.parametrize(
    "n,F2,k,F,F1",
    [(22, 5, (1, 1, 1), 10, 1), (26, 0, (0, 1, 1), 8, 4), (238, 10, (8, 8, 8), 52, 38)],
)
def test_parameters(n, F2, k, F, F1):
    s = family_parameters(n)
    assert (s.F2, s.k, s.F, s.F1) == (F2, k, F, F1)


def test_below_range():
    with pytest.raises(FamilyError, match="below construction range"):
        family_parameters(21)


def test_parameter_invariants():
    for n in range(22, 1001):
        s = family_parameters(n)
        ks = sum(s.k)
        assert s.F2 == (7 * n + 5) % 11
        assert 11 * ks == n - 4 + 3 * s.F2
        assert s.F == 2 * ks + 4 and s.F1 + s.F2 == s.F - 4 and s.F1 >= 0
        assert s.k1 <= s.k2 <= s.k3 <= s.k1 + 1
        assert n == ks + 4 + 5 * s.F1 + 2 * s.F2
        assert n == 11 * ks + 4 - 3 * s.F2
        assert (2 * n - 8 - 5 * s.F2) % 11 == 0
        assert family_size(s) == 7 ** ((2 * n - 8 - 5 * s.F2) // 11) * 3**s.F2
        assert len(s.f_order) == s.F - 4 and s.f2_set == s.f_order[: s.F2]


def test_three_power_beats_seven():
    for f2 in range(11):
        assert 3 ** (11 * f2) >= 7 ** (5 * f2)


def test_family_sizes():
    assert family_size(family_parameters(22)) == 1701
    assert family_size(family_parameters(26)) == 2401
    big = family_size(family_parameters(238))
    assert big == 7**38 * 3**10 and len(str(big)) == 37


def test_skeleton_k4():
    sk = build_skeleton(0, 0, 0)
    assert sk.n == 4 and sk.f_faces == ()
    faces = {frozenset(f) for f in sk.tree.faces()}
    assert {frozenset(f) for f in sk.exceptional} == faces


@pytest.mark.parametrize("k,nv,nf,z", [((1, 1, 1), 7, 10, None), ((8, 8, 8), 28, 52, 19), ((2, 3, 3), 12, 20, None)])
def test_skeleton_shape(k, nv, nf, z):
    sk = build_skeleton(*k)
    t = sk.tree
    assert t.n == nv and len(t.faces()) == nf
    assert len(sk.f_faces) == nf - 4
    assert t.degree(3) <= 6
    for f in sk.f_faces:
        assert sum(v < 3 for v in f) == 1
    faces = {frozenset(f) for f in t.faces()}
    assert {frozenset(f) for f in sk.f_faces} | {frozenset(f) for f in sk.exceptional} == faces
    for e in sk.exceptional:
        assert sum(v < 3 for v in e) >= 2
    for v in range(3, t.n):
        assert sum(v in f for f in t.faces()) <= 6
    if z is not None:
        assert t.degree(2) == z == k[0] + k[1] + 3
    if k == (1, 1, 1):
        assert t.degree(3) == 6


def test_skeleton_order():
    sk = build_skeleton(2, 0, 0)
    w, a1, a2 = 3, 4, 5
    assert sk.f_faces == ((w, a1, 1), (w, a1, 2), (a1, a2, 1), (a1, a2, 2))
    assert sk.exceptional[2] == (a2, 1, 2)


def test_index_digits():
    s = family_parameters(22)
    assert decode_index(s, 0) == ([0], [0] * 5)
    assert decode_index(s, 1700) == ([6], [2] * 5)
    assert decode_index(s, 3) == ([0], [0, 0, 0, 1, 0])
    for i in (0, 1, 17, 1700):
        assert encode_index(s, *decode_index(s, i)) == i
    with pytest.raises(FamilyError, match="out of range"):
        decode_index(s, 1701)
    big = family_parameters(238)
    i = family_size(big) - 12345
    assert encode_index(big, *decode_index(big, i)) == i


def test_member_structure():
    s = family_parameters(22)
    cat = default_catalog()
    g = graph_at(s, cat, 0)
    assert g.n == 22 and len(g.faces()) == 40
    r = recognize(g.adjacency(), (0, 1, 2))
    assert r.n == 22
    sk = skeleton_for(s).tree
    for v in range(sk.n):
        assert g.neighbors(v) & set(range(sk.n)) == sk.neighbors(v)


def test_gadget_placement():
    s = family_parameters(22)
    cat = default_catalog()
    g = graph_at(s, cat, 1700)
    # the single seven-family face is last in f_order, so T7 is planted last
    face = s.f1_faces[0]
    a, b = [v for v in face if v >= 3]
    (c,) = [v for v in face if v < 3]
    ren = {0: a, 1: b, 2: c}
    ren.update({d: g.n - 5 + d - 3 for d in range(3, 8)})
    t7 = cat.seven[6].tree
    expected = {frozenset((ren[u], ren[v])) for u, v in t7.edges()}
    got = {frozenset(e) for e in g.edges() if set(e) <= set(ren.values())}
    assert got == expected


def test_enumeration():
    s = family_parameters(22)
    seen = set()
    count = 0
    for i, g in enumerate_family(s, default_catalog()):
        assert g.n == 22 and len(g.faces()) == 40
        seen.add(tuple(sorted(g.edges())))
        count += 1
    assert count == 1701
    assert len(seen) == 1701


def test_sharded_enumeration():
    s = family_parameters(22)
    cat = default_catalog()
    a = [i for i, _ in enumerate_family(s, cat, 0, 10)]
    b = [i for i, _ in enumerate_family(s, cat, 10, 20)]
    assert a + b == list(range(20))


def test_degree_report():
    s = family_parameters(238)
    cat = default_catalog()
    for index in (0, family_size(s) - 1, 7**20 + 5):
        rep = degree_report(graph_at(s, cat, index), s)
        assert min(rep.outer.values()) >= 35
        assert rep.skeleton_max <= 30 and rep.gadget_max <= 7
        assert rep.separated()


def test_json():
    d = json.loads(family_parameters(22).to_json())
    assert d["F2"] == 5 and d["family_size"] == "1701"
    assert len(d["f_order"]) == 6

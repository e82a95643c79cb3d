"""
Stacking programs and recognition
=================================

Build a small planar 3-tree, look at its face tree, then recover it from
bare adjacency with a different outer face.
"""

from stackembed.tritree import face_tree, parse_stacking, recognize

t = parse_stacking(
    """
    outer: a b c
    d: a b c
    e: a c d
    f: c d e
    """.splitlines()
)
print(t)
print(t.to_text())
print("faces (outer first):", t.faces())

# each split node lists how many vertices end up in each of its three children
ft = face_tree(t)
for node in ft.splits():
    print(node.face, "apex", node.apex, "child counts", node.counts)

# peel degree-3 vertices to rebuild a stacking program rooted at any face
adj = {t.labels[v]: {t.labels[u] for u in nb} for v, nb in enumerate(t.adjacency())}
r = recognize(adj, ("d", "e", "f"))
print(r.to_text())

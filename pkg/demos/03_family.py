"""
Planted families
================

Parameters, the skeleton, and a couple of members picked by index.
"""

from stackembed.family import build_skeleton, decode_index, degree_report, family_parameters, family_size, graph_at
from stackembed.gadgets import default_catalog

cat = default_catalog()
for g in cat.seven + cat.three:
    print(g.name, g.family, g.tree.n, "vertices")

spec = family_parameters(22)
print(spec.k, "F =", spec.F, "F1 =", spec.F1, "F2 =", spec.F2, "size =", family_size(spec))

sk = build_skeleton(*spec.k)
print("skeleton:", sk.n, "vertices,", len(sk.tree.faces()), "faces")
print("gadget faces in order:", sk.f_faces)

# an index is a mixed-radix number: base-7 digits first, then base-3 digits
for index in (0, 1700):
    print(index, decode_index(spec, index), graph_at(spec, cat, index).n)

# at the large end only sampling is possible: 37-digit family sizes
big = family_parameters(238)
print(family_size(big))
rep = degree_report(graph_at(big, cat, 10**30), big)
print("outer degrees", rep.outer, "skeleton max", rep.skeleton_max, "gadget max", rep.gadget_max)

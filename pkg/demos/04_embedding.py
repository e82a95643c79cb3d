"""
Embedding on a point set
========================

Fixed outer mapping, free mapping, and the brute-force oracle on a
five-point set.  Ends by drawing a 22-vertex member to SVG.
"""

from pathlib import Path

from stackembed.embed import (
    brute_embed,
    decide_embed_fixed,
    decide_embed_free,
    place_apex,
    random_drawing,
    render_svg,
)
from stackembed.family import family_parameters, graph_at
from stackembed.gadgets import default_catalog
from stackembed.pointsets import trial_rng
from stackembed.tritree import new_root

X = [(0, 0), (12, 0), (0, 12), (4, 4), (1, 2)]
hull = [(0, 0), (12, 0), (0, 12)]

# the apex is whichever point splits the rest as the counts say
print(place_apex(X[3:], hull, (0, 1, 0)), place_apex(X[3:], hull, (1, 0, 0)))

g = new_root()
d = g.stack((0, 1, 2), "d")
g.stack((0, 2, d), "e")
w = decide_embed_fixed(g, X, hull)
print("fixed:", w.pos, w.is_plane(g))

h = new_root()
d = h.stack((0, 1, 2), "d")
h.stack((0, 1, d), "e")
print("fixed, other graph:", decide_embed_fixed(h, X, hull))
free = decide_embed_free(h, X)
print("free:", free.face, free.mapping)
print("brute force agrees:", brute_embed(h, X))

member = graph_at(family_parameters(22), default_catalog(), 42)
drawing = random_drawing(member, trial_rng(0, 0))
print("22-vertex drawing is plane:", drawing.is_plane(member))
out = Path("member42.svg")
out.write_text(render_svg(member, drawing))
print("wrote", out)

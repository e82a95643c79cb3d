"""
How many members fit on one point set?
======================================

Isomorphism classes of the n=22 family and a short conflict search.
"""

from collections import Counter

from stackembed.family import enumerate_family, family_parameters
from stackembed.gadgets import default_catalog
from stackembed.iso import iso_histogram
from stackembed.verify import conflict_search, gadget_lemma

spec = family_parameters(22)
hist = iso_histogram(g for _, g in enumerate_family(spec, default_catalog()))
print(len(hist), "classes; class sizes:", Counter(hist.values()))

# the gadget families never have three members on one fixed mapping
for fam in ("Ttilde", "T"):
    rep = gadget_lemma(fam, trials=200, seed=1)
    print(rep["check"], "max per mapping:", rep["max_embeddable"], "violations:", rep["violations"])

# a few random 22-point sets (the first call shapes every member, a few seconds)
rep = conflict_search(22, trials=5, seed=7)
print("counts per set:", rep["histogram"], "bound:", rep["exact_upper"])

"""
Counting bounds
===============

Exact big-integer bounds and the limiting ratio for universal point sets.
"""

from stackembed.bounds import bounds_report, corollary_ratio, double_count_check, threshold_m

r = bounds_report(238)
print("family size:", r.family_size)
print("exact upper:", r.exact_upper, "<= theorem upper:", r.theorem_upper_exact, r.exact_le_theorem)

for n in (22, 100, 500, 2000):
    r = bounds_report(n)
    print(n, f"{float(r.class_lower):.3e}", f"{r.theorem_upper:.3e}")

c = corollary_ratio()
print("ratio:", round(c, 6))

# the smallest m passing the double count creeps up towards c * n
for n in (238, 1100, 11000):
    m = threshold_m(n)
    print(n, m, round(m / n, 4), double_count_check(n, m - 1))

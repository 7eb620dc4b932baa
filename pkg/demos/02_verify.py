"""
Checking every 5-clique
=======================

A (5,6)-coloring needs six colors inside every K_5. The verifier walks all
C(n,5) subsets; for q=7 that is about 1.9 million.
"""

import math

from ramsey56 import EdgeColoring, build, verify
from ramsey56.verifier import lower_bound_56

for q in (3, 5, 7):
    con = build(q)
    report = verify(con.coloring, p=5, q_min=6)
    print(f"q={q}: {report.cliques_checked} == C({con.n},5) = {math.comb(con.n, 5)}")
    print(report)

# a coloring that fails, for contrast: two colors split by parity
bad = EdgeColoring.from_function(12, lambda u, v: (u + v) % 2)
print(verify(bad, 5, 6))

# the construction uses far more colors than the lower bound demands
for q in (3, 5, 7):
    n = q * q
    value, ceil = lower_bound_56(n)
    print(f"n={n}: at least {value:.3f} -> {ceil} colors needed, construction uses {build(q).num_colors}")

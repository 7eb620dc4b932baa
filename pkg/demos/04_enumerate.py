"""
Colorings of K_5 that survive the filter
========================================

Grow colorings one vertex at a time, dropping any that contain a forbidden
configuration and keeping one representative per isomorphism class. With
five colors and the residual configurations left out of the filter, seven
colorings of K_5 remain, and each one contains a residual configuration.
"""

from ramsey56 import canonical_key, enumerate_residual, enumerate_colorings
from ramsey56.enumerator import brute_force_classes, output_lines
from ramsey56.patterns import RESIDUAL

# (1,2,1) and (2,1,1) are the same triangle up to relabelling
print(canonical_key([1, 2, 1]), canonical_key([2, 1, 1]))

# the incremental count agrees with brute force
for n, m in [(3, 3), (4, 3), (4, 4)]:
    print((n, m), len(enumerate_colorings(n, m)), len(brute_force_classes(n, m)))

survivors = enumerate_residual(n=5, m=5, exclude=RESIDUAL)
print("\n".join(output_lines(survivors, 5, 5, RESIDUAL)))

# with the residual configurations forbidden too, nothing is left
print("full list:", len(enumerate_residual(n=5, m=5, exclude=())))

#!/usr/bin/env python3
"""Trace forms of multiquadratic extensions and their graded classes.

The trace form of F(sqrt(a1),...,sqrt(ak)) diagonalizes over the square-root
basis; its symmetric classes collapse dramatically: everything vanishes
between degree 0 and degree 2^(k-1).
"""

from thetasw import Ring, gsw_from_sw, pure_field, sw_classes, trace_form

for k in (1, 2, 3):
    E = pure_field(k, range(1, k + 1))
    q = trace_form(E)
    print(f"k={k}: trace form of {E} is diag(" + ", ".join(str(c) for c in q.coeffs) + ")")
    alpha = gsw_from_sw(sw_classes(q, min(q.rank, 1 << (k - 1))))
    for i, x in enumerate(alpha):
        print(f"   class {i}: {x}")
    print()

R = Ring(3)
top = gsw_from_sw(sw_classes(trace_form(pure_field(3, {1, 2, 3})), 4))[4]
print("the k=3 top class, term by term: ", top)
k, part = top.min_eps_part(4)
print(f"minimal-e part: e-exponent {k}, part {part}")

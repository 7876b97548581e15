#!/usr/bin/env python3
"""The subset-product polynomials: exact expansions and their collapse mod 2.

p_n multiplies (1 + sum of a subset) over all 2^n subsets; q_n shifts the
constant by one extra variable.  Over the integers p_n = p_(n-1) * q_(n-1);
mod 2, everything between degree 0 and 2^(n-1) cancels, and the surviving
half-degree part maps onto the top symmetric class of the quotient ring.
"""

import time

from thetasw import Ring, build_p, build_q, ring_image, top_symmetric_class, verify_identities

print("p2 =", sorted(build_p(2).terms.items()))
print("q1 =", sorted(build_q(1).terms.items()))

t0 = time.perf_counter()
p5 = build_p(5)
print(f"\np5 has {len(p5.terms)} terms of degree up to {p5.degree()}"
      f" (built exactly in {time.perf_counter() - t0:.2f} s)")

p4, q4 = build_p(4), build_q(4)
t0 = time.perf_counter()
print("p5 == p4 * q4 over the integers:", p5 == p4.extend(5) * q4,
      f"({time.perf_counter() - t0:.2f} s for the full product)")

n = 4
ring = Ring(n)
half = 1 << (n - 1)
image = ring_image(build_p(n).pol_part(half), ring)
print(f"\nhalf-degree image of p{n}:", image)
print("closed form sum e^(2^(n-1)-i) s_i:", top_symmetric_class(ring))
print("equal:", image == top_symmetric_class(ring))

print("\nidentity battery at n=3:")
for check, passed, detail in verify_identities(3):
    print(f"   {'PASS' if passed else 'FAIL'} {check.name}: {check.anchor}")

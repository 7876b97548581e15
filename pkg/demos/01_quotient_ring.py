#!/usr/bin/env python3
"""A tour of the quotient ring that models mod-2 symbols.

The ring F2[a1..an, e, t]/(ai^2 - e*ai, t^2, e*t) is where every class in
this package lives: e stands for the class of -1, t for the class of 2, and
each ai for a transcendental coordinate of the ground field.
"""

from thetasw import Ring

R = Ring(3)
a1, a2, a3 = R.a(1), R.a(2), R.a(3)

print("characteristic 2:          a1 + a1 =", a1 + a1)
print("squares pick up e:         a1 * a1 =", a1 * a1)
print("the class of 2 squares to: t * t   =", R.tau * R.tau)
print("and kills e:               e * t   =", R.eps * R.tau)

x = (R.one + a1) * (R.one + a2 + R.eps * a3)
print("\na sample product:", x)
print("its degree-2 part:", x.degree_part(2))

# minimal-e extraction: the tool used to separate classes by residue depth
y = R.eps**3 * a1 + R.eps**2 * a1 * a2
print("\ny =", y)
k, part = y.min_eps_part(4)
print(f"minimal-e part of the degree-4 component: e-exponent {k}, part {part}")

# exponent reduction: a1^5 e^2 t^0 normalizes in one step
print("\na1^5 e^2 reduces to:", R.from_exponents([5, 0, 0], eps_pow=2))

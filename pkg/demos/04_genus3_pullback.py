#!/usr/bin/env python3
"""The genus-3 story: decompose the odd thetas, compare the degree-2 classes.

A genus-3 hyperelliptic curve with branch points (+-sqrt(ai) : 1), 0, infinity
has 28 odd theta characteristics.  Sorting them by minimal field of definition
gives an etale algebra, whose degree-2 class turns out to be exactly the
branch-divisor class alpha2(W) twisted by {-1} alpha1(W) - an equality of two
ring elements this script recomputes from scratch.
"""

from thetasw import EtaleAlgebra, Ring, alpha_total, decompose, pure_field
from thetasw.symbols import SquareClass, residue, substitute
from thetasw.quadform import DiagonalForm, MultiquadraticField, w2_conic

R = Ring(3)

S_minus = decompose(3, "odd")
print("odd theta algebra factors (A = generating variables, m = multiplicity):")
for E, mult in S_minus.factors:
    print(f"   {str(E):<28} m={mult}")
print("degree:", S_minus.degree)

W = EtaleAlgebra(
    3,
    (
        (pure_field(3, {1}), 1),
        (pure_field(3, {2}), 1),
        (pure_field(3, {3}), 1),
        (pure_field(3, ()), 2),
    ),
)
aW = alpha_total(W, 2)
a_odd = alpha_total(S_minus, 2)

print("\nalpha1(W)         =", aW[1])
print("alpha2(W)         =", aW[2])
print("alpha2(odd)       =", a_odd[2])
print("alpha2(W)+e*a1(W) =", aW[2] + R.eps * aW[1])
print("identity holds:   ", a_odd[2] == aW[2] + R.eps * aW[1])

print("\nresidue ladder pins the coefficients:")
print("   d/a1:", residue(a_odd[2], 1))
print("   then d/a2:", residue(residue(a_odd[2], 1), 2))

# the second curve: an irrational conic with rational branch points over F'
R2 = Ring(2)
q = DiagonalForm(2, (SquareClass.of_var(1), SquareClass.of_var(2), SquareClass(vars=frozenset({1, 2}))))
w2 = w2_conic(q)
twisted = MultiquadraticField(2, (SquareClass(sign=1, vars=frozenset({2})),))
S2 = EtaleAlgebra(2, ((pure_field(2, ()), 4), (twisted, 12)))
print("\nsecond curve: w2 of the conic =", w2)
print("   after base change to F(sqrt(-a2)):", substitute(w2, {1: SquareClass.of_var(1), 2: SquareClass.minus_one()}, R2))
print("   alpha2 of its theta algebra F^4 x F'^12:", alpha_total(S2, 2)[2])

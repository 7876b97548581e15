#!/usr/bin/env python3
"""Square classes, symbols, and the residue maps that lower degree by one."""

from thetasw import Ring, SquareClass, class_symbol, residue, residue_chain, substitute, symbol

R = Ring(3)

minus_one = SquareClass.minus_one()
two = SquareClass(two=1)
a1, a2, a3 = (SquareClass.of_var(i) for i in (1, 2, 3))
print("the class of -2 a1 a2 has symbol:", class_symbol(SquareClass(1, 1, frozenset({1, 2})), R))

print("\nsymbols multiply degree-one classes:")
print("  {a1, a1}    =", symbol([a1, a1], R), "   (same entry twice picks up e)")
print("  {2, -1}     =", symbol([two, minus_one], R))
print("  {a1, a2, a3} =", symbol([a1, a2, a3], R))

x = symbol([minus_one, SquareClass(vars=frozenset({1, 2, 3}))], R)
for i, j in ((1, 2), (1, 3), (2, 3)):
    x = x + symbol([SquareClass.of_var(i), SquareClass.of_var(j)], R)
print("\nthe degree-2 class of the genus-3 odd thetas:", x)
print("residue at a1:        ", residue(x, 1))
print("then residue at a2:   ", residue(residue(x, 1), 2), "  (the coefficient we wanted)")
print("full chain a1,a2,a3:  ", residue_chain(x, (1, 2, 3)))

# specialization: over F(sqrt(-a2)) the class a2 becomes the class -1
print("\nsubstitution is a ring map: {a1,a2} with a2 -> -1 gives",
      substitute(symbol([a1, a2], R), {1: a1, 2: minus_one}, R))
print("and e*{a1} with a1 -> -1 is forced to", substitute(R.eps * R.a(1), {1: minus_one}, R))

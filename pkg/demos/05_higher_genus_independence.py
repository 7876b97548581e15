#!/usr/bin/env python3
"""Higher genus: multiplicity tables and the residue-chain separation.

For each genus, every field E_A appears 2^(g-1-|A|) times among both odd and
even theta characteristics (with the full field appearing once, on the even
side only).  The top classes of the odd and full theta algebras then sit in
degrees 2^(g-2) and 2^(g-1), and a chain of residues tells them apart: the
full class survives as a power of e, the odd class dies.
"""

from thetasw import Ring, alpha_total, decompose, multiplicity_table, residue_chain

for g in (3, 4, 5):
    print(f"genus {g}")
    table = multiplicity_table(g)
    by_size = {}
    for A, (n_odd, n_even) in table.items():
        by_size.setdefault(len(A), (n_odd, n_even))
    print("   multiplicities by |A| (odd, even):", dict(sorted(by_size.items())))

    ring = Ring(g)
    quarter, half = 1 << (g - 2), 1 << (g - 1)
    a_odd = alpha_total(decompose(g, "odd"), quarter)
    a_all = alpha_total(decompose(g, "all"), half)
    k1, part1 = a_odd[quarter].min_eps_part(quarter)
    k2, part2 = a_all[half].min_eps_part(half)
    print(f"   first nonzero odd class, degree {quarter}: min e-exponent {k1}, part {part1}")
    print(f"   first nonzero full class, degree {half}: min e-exponent {k2}, part {part2}")
    chain = range(1, g + 1)
    print(f"   residue chain on the full class: {residue_chain(a_all[half], chain)}")
    print(f"   residue chain on the odd class:  {residue_chain(a_odd[quarter], chain)}")
    print()

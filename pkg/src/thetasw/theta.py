"""Two-torsion and theta-characteristic combinatorics of hyperelliptic curves.

A genus-g hyperelliptic curve has 2g+2 branch points, labeled 1..2g+2.  Its
theta characteristics are encoded by subsets T of the labels, subject to two
identifications: toggling the last label 2g+2 does not change the class, and
neither does replacing T by its complement.  Each class therefore has a
canonical representative with |T| = g+1 (mod 2) and |T| <= g+1, breaking the
tie at |T| = g+1 lexicographically; there are 2^(2g) classes, of which
2^(g-1)(2^g - 1) are odd and 2^(g-1)(2^g + 1) are even.  The class is even
exactly when |T| = g+1 (mod 4).

The test configuration puts the branch points over k(a1,...,ag): points
2j-1, 2j are conjugate over F(sqrt(aj)) and the last two points are rational.
The Galois group (Z/2)^g acts by swapping the pairs; the minimal field of
definition of a class is F(sqrt(aj), j in A) where A collects the pairs
meeting T in exactly one point.  Orbit enumeration under this action
decomposes the odd/even/all theta sets into etale algebras.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .etale import EtaleAlgebra
from .quadform import pure_field

GENUS_BOUND = 7  # full enumeration is C(2g+2, g+1)-sized; 7 keeps it instant

PARITIES = ("odd", "even", "all")


def _check_genus(g: int) -> None:
    if not 2 <= g <= GENUS_BOUND:
        raise ValueError(f"genus must be in 2..{GENUS_BOUND}, got {g}")


def _check_subset(g: int, T) -> frozenset[int]:
    T = frozenset(T)
    if any(not 1 <= i <= 2 * g + 2 for i in T):
        raise ValueError(f"labels must lie in 1..{2 * g + 2}")
    return T


def _canonical_theta_subset(g: int, T: frozenset[int]) -> frozenset[int]:
    last = 2 * g + 2
    full = frozenset(range(1, last + 1))
    if len(T) % 2 != (g + 1) % 2:
        T = T ^ {last}
    if len(T) > g + 1:
        T = full - T
    if len(T) == g + 1:
        comp = full - T
        if tuple(sorted(comp)) < tuple(sorted(T)):
            T = comp
    return T


@dataclass(frozen=True)
class ThetaChar:
    """Canonical representative of a theta characteristic; build via `canonicalize`."""

    g: int
    T: frozenset[int]

    def __post_init__(self):
        _check_genus(self.g)
        T = _check_subset(self.g, self.T)
        if T != _canonical_theta_subset(self.g, T):
            raise ValueError(f"subset {sorted(T)} is not canonical for genus {self.g}")
        object.__setattr__(self, "T", T)

    def sort_key(self) -> tuple:
        return (len(self.T), tuple(sorted(self.T)))

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.T)) + "}"


def canonicalize(g: int, T) -> ThetaChar:
    """Canonical representative of the class of T under both identifications."""
    _check_genus(g)
    return ThetaChar(g, _canonical_theta_subset(g, _check_subset(g, T)))


def parity(t: ThetaChar) -> str:
    """'even' iff |T| = g+1 (mod 4)."""
    return "even" if len(t.T) % 4 == (t.g + 1) % 4 else "odd"


def enumerate_thetas(g: int, which: str = "all") -> frozenset[ThetaChar]:
    """All canonical theta characteristics of genus g passing the parity filter."""
    _check_genus(g)
    if which not in PARITIES:
        raise ValueError(f"parity filter must be one of {PARITIES}")
    labels = range(1, 2 * g + 3)
    full = frozenset(labels)
    out = []
    for size in range((g + 1) % 2, g + 2, 2):
        for combo in itertools.combinations(labels, size):
            T = frozenset(combo)
            if size == g + 1:
                comp = full - T
                if tuple(sorted(comp)) < combo:
                    continue
            t = ThetaChar(g, T)
            if which == "all" or parity(t) == which:
                out.append(t)
    return frozenset(out)


@dataclass(frozen=True)
class AlphaClass:
    """Canonical representative of a two-torsion class; build via `canonical_alpha`."""

    g: int
    T: frozenset[int]

    def __post_init__(self):
        _check_genus(self.g)
        T = _check_subset(self.g, self.T)
        if T != _canonical_alpha_subset(self.g, T):
            raise ValueError(f"subset {sorted(T)} is not canonical for genus {self.g}")
        object.__setattr__(self, "T", T)


def _canonical_alpha_subset(g: int, T: frozenset[int]) -> frozenset[int]:
    last = 2 * g + 2
    T = T - {last}
    comp = frozenset(range(1, last)) - T
    return T if len(T) < len(comp) else comp


def canonical_alpha(g: int, T) -> AlphaClass:
    """Canonical representative of the two-torsion class of T."""
    _check_genus(g)
    return AlphaClass(g, _canonical_alpha_subset(g, _check_subset(g, T)))


def translate(t: ThetaChar, a: AlphaClass) -> ThetaChar:
    """Torsor action of a two-torsion class: symmetric difference, recanonicalized."""
    if t.g != a.g:
        raise ValueError("genus mismatch")
    return canonicalize(t.g, t.T ^ a.T)


@dataclass(frozen=True)
class GaloisAction:
    """(Z/2)^g acting on the branch points: generator j swaps the j-th pair.

    The pairs must partition {1..2g}; the labels 2g+1, 2g+2 stay fixed.  The
    j-th pair carries the square class aj, so an orbit with pair set A is
    defined over the field generated by sqrt(aj) for j in A.
    """

    g: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        _check_genus(self.g)
        pairs = tuple((min(p), max(p)) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if len(pairs) != self.g:
            raise ValueError(f"expected {self.g} pairs, got {len(pairs)}")
        seen = [i for p in pairs for i in p]
        if sorted(seen) != list(range(1, 2 * self.g + 1)):
            raise ValueError("pairs must partition the non-rational labels 1..2g")

    @classmethod
    def default(cls, g: int) -> "GaloisAction":
        """The shipped configuration: generator j swaps labels 2j-1, 2j."""
        return cls(g, tuple((2 * j - 1, 2 * j) for j in range(1, g + 1)))

    def apply(self, j: int, t: ThetaChar) -> ThetaChar:
        """Image of t under the j-th generator."""
        if not 1 <= j <= self.g:
            raise ValueError(f"generator index {j} out of range 1..{self.g}")
        lo, hi = self.pairs[j - 1]
        T = set(t.T)
        in_lo, in_hi = lo in T, hi in T
        if in_lo != in_hi:
            T ^= {lo, hi}
        return canonicalize(self.g, T)


def field_of_definition(t: ThetaChar, act: GaloisAction) -> frozenset[int]:
    """Indices j whose pair meets T in exactly one point: the minimal field's generators."""
    if t.g != act.g:
        raise ValueError("genus mismatch")
    return frozenset(
        j for j, (lo, hi) in enumerate(act.pairs, start=1) if (lo in t.T) != (hi in t.T)
    )


def orbit(t: ThetaChar, act: GaloisAction) -> frozenset[ThetaChar]:
    """Orbit of t under the full (Z/2)^g action."""
    if t.g != act.g:
        raise ValueError("genus mismatch")
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for u in frontier:
            for j in range(1, act.g + 1):
                v = act.apply(j, u)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def orbit_multiplicities(g: int, which: str, act: GaloisAction | None = None) -> dict[frozenset[int], int]:
    """Number of orbits with each field of definition A, over the parity filter."""
    if act is None:
        act = GaloisAction.default(g)
    counts: dict[frozenset[int], int] = {}
    remaining = set(enumerate_thetas(g, which))
    while remaining:
        t = remaining.pop()
        orb = orbit(t, act)
        remaining -= orb
        A = field_of_definition(t, act)
        counts[A] = counts.get(A, 0) + 1
    return counts


def decompose(g: int, which: str, act: GaloisAction | None = None) -> EtaleAlgebra:
    """Etale algebra of the selected theta characteristics: one field factor per orbit."""
    counts = orbit_multiplicities(g, which, act)
    factors = tuple((pure_field(g, A), mult) for A, mult in counts.items())
    return EtaleAlgebra(g, factors)


def multiplicity_table(g: int, act: GaloisAction | None = None) -> dict[frozenset[int], tuple[int, int]]:
    """Per-A factor multiplicities (odd count, even count), for every A in {1..g}."""
    _check_genus(g)
    odd = orbit_multiplicities(g, "odd", act)
    even = orbit_multiplicities(g, "even", act)
    table = {}
    for r in range(g + 1):
        for combo in itertools.combinations(range(1, g + 1), r):
            A = frozenset(combo)
            table[A] = (odd.get(A, 0), even.get(A, 0))
    return table

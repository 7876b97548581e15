"""Square classes, symbols, residue maps and specializations.

A square class of the ground field k(a1,...,an) is written
(-1)^sign * 2^two * prod(ai for i in vars); the class of 1 is (0, 0, empty).
Its symbol is the degree-one ring element sign*e + two*t + sum(ai), and the
symbol of a list of classes is the product of their degree-one symbols.

The residue map `residue(x, i)` is taken at the valuation ai = 0 with
uniformizer ai and all other generators passing to units of the residue
field: monomials containing ai lose the ai factor, every other monomial dies,
and e, t pass through.  The result is returned in the same ambient ring
(where variable ai simply no longer occurs), so iterated residues need no
index bookkeeping and commute on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .ring import Monomial, Ring, RingElement


@dataclass(frozen=True)
class SquareClass:
    """The square class (-1)^sign * 2^two * prod(ai, i in vars)."""

    sign: int = 0
    two: int = 0
    vars: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "sign", self.sign & 1)
        object.__setattr__(self, "two", self.two & 1)
        object.__setattr__(self, "vars", frozenset(self.vars))
        if any(i < 1 for i in self.vars):
            raise ValueError("variable indices start at 1")

    @classmethod
    def one(cls) -> "SquareClass":
        return cls()

    @classmethod
    def of_var(cls, i: int) -> "SquareClass":
        return cls(vars=frozenset((i,)))

    @classmethod
    def minus_one(cls) -> "SquareClass":
        return cls(sign=1)

    def is_one(self) -> bool:
        return not (self.sign or self.two or self.vars)

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        # square classes form an F2 vector space
        return SquareClass(self.sign ^ other.sign, self.two ^ other.two, self.vars ^ other.vars)

    def sort_key(self) -> tuple:
        return (self.sign, self.two, len(self.vars), tuple(sorted(self.vars)))

    def __str__(self) -> str:
        parts = []
        if self.sign:
            parts.append("-1")
        if self.two:
            parts.append("2")
        parts.extend(f"a{i}" for i in sorted(self.vars))
        return "*".join(parts) if parts else "1"


def class_symbol(c: SquareClass, ring: Ring) -> RingElement:
    """Degree-one symbol of a square class: sign*e + two*t + sum of its ai."""
    terms = []
    if c.sign:
        terms.append(Monomial(0, 1, 0))
    if c.two:
        terms.append(Monomial(0, 0, 1))
    for i in c.vars:
        if i > ring.n:
            raise ValueError(f"class mentions a{i} but the ring has {ring.n} variables")
        terms.append(Monomial(1 << (i - 1), 0, 0))
    return RingElement(ring.n, terms)


def symbol(classes: Iterable[SquareClass], ring: Ring) -> RingElement:
    """Product of the degree-one symbols of the given classes; empty product is 1."""
    out = ring.one
    for c in classes:
        out = out * class_symbol(c, ring)
    return out


def residue(x: RingElement, i: int) -> RingElement:
    """Residue at ai = 0: delete ai from the monomials containing it, drop the rest."""
    if not 1 <= i <= x.n:
        raise ValueError(f"variable index {i} out of range 1..{x.n}")
    bit = 1 << (i - 1)
    return RingElement(x.n, (Monomial(m.mask ^ bit, m.eps, m.tau) for m in x.terms if m.mask & bit))


@dataclass(frozen=True)
class ResidueChain:
    """An ordered list of distinct variable indices to take residues at."""

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("residue chain indices must be distinct")


def residue_chain(x: RingElement, chain: ResidueChain | Sequence[int]) -> RingElement:
    """Left fold of `residue` over the chain; residues commute, so order is moot."""
    indices = chain.indices if isinstance(chain, ResidueChain) else tuple(chain)
    out = x
    for i in indices:
        out = residue(out, i)
    return out


def substitute(x: RingElement, assignment: Mapping[int, SquareClass], target: Ring) -> RingElement:
    """Apply the ring map ai -> symbol(assignment[i]), e -> e, t -> t, then reduce.

    The assignment must cover every variable occurring in x.  This is a ring
    homomorphism because the symbol of any square class c satisfies
    symbol(c)^2 = e * symbol(c), matching the relation ai^2 = e*ai.
    """
    images: dict[int, RingElement] = {}
    for i, c in assignment.items():
        if not 1 <= i <= x.n:
            raise ValueError(f"assignment for a{i} outside the source ring (n={x.n})")
        images[i] = class_symbol(c, target)
    out = target.zero
    for m in x.terms:
        # stored monomials are reduced, so (eps, tau) is never (positive, 1)
        term = RingElement(target.n, (Monomial(0, m.eps, m.tau),))
        for i in range(1, x.n + 1):
            if m.mask >> (i - 1) & 1:
                if i not in images:
                    raise ValueError(f"assignment does not cover a{i}")
                term = term * images[i]
        out = out + term
    return out

"""Stiefel-Whitney classes of diagonal quadratic forms and trace forms.

The i-th Stiefel-Whitney class of a diagonal form diag(d1,...,dn) is the i-th
elementary symmetric polynomial of the symbols {d1},...,{dn}, computed here as
the degree-i coefficient of the truncated generating product
prod_j (1 + {dj} * T).  Trace forms of multiquadratic extensions
F(sqrt(d1),...,sqrt(dk)) diagonalize as the 2^k classes 2^k * prod(dj, j in S)
over subsets S, with 2^k folded to 2^(k mod 2) since square classes absorb
even powers of 2.

Converting Stiefel-Whitney classes to the Galois flavor twists one parity by
t = {2}: alpha_i = sw_i + t * sw_(i-1) on the twisted parity, alpha_i = sw_i
on the other.  Both parity conventions are implemented; they agree whenever
t acts as zero (e.g. after specializing to the reals).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ring import Ring, RingElement
from .symbols import SquareClass, class_symbol

# conventions for which parity of index picks up the t-twist
EVEN_TWISTED = "even-twisted"
ODD_TWISTED = "odd-twisted"


@dataclass(frozen=True)
class DiagonalForm:
    """A diagonalized nondegenerate quadratic form: a multiset of square classes."""

    n: int  # ambient variable count
    coeffs: tuple[SquareClass, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a diagonal form needs at least one coefficient")
        for c in self.coeffs:
            if any(i > self.n for i in c.vars):
                raise ValueError(f"coefficient {c} uses a variable beyond a{self.n}")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def concat(self, other: "DiagonalForm") -> "DiagonalForm":
        """Orthogonal sum of two forms."""
        if self.n != other.n:
            raise ValueError("mixed ambient rings")
        return DiagonalForm(self.n, self.coeffs + other.coeffs)


@dataclass(frozen=True)
class MultiquadraticField:
    """F(sqrt(d1),...,sqrt(dk)) given by its generator square classes d1..dk.

    Generators must be independent in the square-class group: no nonempty
    sub-product of distinct generators may be the trivial class.
    """

    n: int
    generators: tuple[SquareClass, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for d in self.generators:
            if any(i > self.n for i in d.vars):
                raise ValueError(f"generator {d} uses a variable beyond a{self.n}")
        for r in range(1, len(self.generators) + 1):
            for combo in itertools.combinations(self.generators, r):
                prod = SquareClass.one()
                for d in combo:
                    prod = prod * d
                if prod.is_one():
                    raise ValueError("generators are dependent in the square-class group")

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def degree(self) -> int:
        return 1 << self.k

    def sort_key(self) -> tuple:
        return (self.k, tuple(d.sort_key() for d in self.generators))

    def __str__(self) -> str:
        if not self.generators:
            return "F"
        return "F(" + ", ".join(f"sqrt({d})" for d in self.generators) + ")"


def pure_field(n: int, vars: frozenset[int] | set[int] | tuple[int, ...]) -> MultiquadraticField:
    """F(sqrt(aj), j in vars) with untwisted generators, in canonical order."""
    return MultiquadraticField(n, tuple(SquareClass.of_var(j) for j in sorted(vars)))


def trace_form(E: MultiquadraticField) -> DiagonalForm:
    """Trace form of E in the square-root basis: 2^k * prod(dj, j in S) over S."""
    two_part = SquareClass(two=E.k & 1)
    coeffs = []
    for r in range(E.k + 1):
        for combo in itertools.combinations(E.generators, r):
            c = two_part
            for d in combo:
                c = c * d
            coeffs.append(c)
    coeffs.sort(key=SquareClass.sort_key)
    return DiagonalForm(E.n, tuple(coeffs))


def sw_classes(q: DiagonalForm, max_i: int) -> list[RingElement]:
    """Stiefel-Whitney classes sw_0..sw_max_i of q via the generating product."""
    if max_i > q.rank:
        raise ValueError(f"requested class {max_i} beyond the rank {q.rank}")
    ring = Ring(q.n)
    series = [ring.one] + [ring.zero] * max_i
    for c in q.coeffs:
        s = class_symbol(c, ring)
        for i in range(max_i, 0, -1):
            series[i] = series[i] + series[i - 1] * s
    return series


def gsw_from_sw(sw: list[RingElement], convention: str = EVEN_TWISTED) -> list[RingElement]:
    """Twist a Stiefel-Whitney class list into Galois-Stiefel-Whitney classes."""
    if convention not in (EVEN_TWISTED, ODD_TWISTED):
        raise ValueError(f"unknown convention {convention!r}")
    if not sw:
        raise ValueError("empty class list")
    ring = Ring(sw[0].n)
    if sw[0] != ring.one:
        raise ValueError("class list must start with 1")
    twisted_parity = 0 if convention == EVEN_TWISTED else 1
    out = [sw[0]]
    for i in range(1, len(sw)):
        x = sw[i]
        if i % 2 == twisted_parity:
            x = x + ring.tau * sw[i - 1]
        out.append(x)
    return out


def w2_conic(q: DiagonalForm) -> RingElement:
    """Brauer class of the conic cut out by a rank-3 form: sw_2(q) + e^2."""
    if q.rank != 3:
        raise ValueError(f"conic invariant needs a rank-3 form, got rank {q.rank}")
    ring = Ring(q.n)
    return sw_classes(q, 2)[2] + ring.eps * ring.eps

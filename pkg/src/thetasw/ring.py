"""Exact arithmetic in the graded ring R_n = F2[a1..an, e, t]/(ai^2 - e*ai, t^2, e*t).

This ring models mod-2 symbol arithmetic over a rational function field
k(a1,...,an): the degree-one generators a1..an are the classes of the
coordinates, e is the class of -1 and t is the class of 2.  The model is
faithful when k is totally real; every equality this package produces is an
equality in this ring.

Representation.  A monomial is a triple (mask, eps, tau): `mask` is a bitmask
of the ai present (each with exponent 0 or 1 once reduced), `eps` the exponent
of e, `tau` the exponent of t.  The rewriting system

    ai^2 -> e*ai,    t^2 -> 0,    e*t -> 0

is confluent and applied eagerly, so stored monomials always satisfy
tau <= 1 and (tau == 1 implies eps == 0).  An element is a frozenset of
monomials; coefficients live in F2, so addition is symmetric difference and
the zero element is the empty set.

All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

MAX_VARS = 63  # monomial variable sets live in one machine word


class Monomial(NamedTuple):
    """A reduced monomial e^eps * t^tau * prod(ai for bit i-1 set in mask)."""

    mask: int
    eps: int
    tau: int

    @property
    def degree(self) -> int:
        return self.mask.bit_count() + self.eps + self.tau

    def sort_key(self) -> tuple:
        # canonical order: (degree, eps, tau, variable indices read left to right)
        return (self.degree, self.eps, self.tau, self.var_indices())

    def var_indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    def render(self) -> str:
        parts = []
        if self.eps == 1:
            parts.append("e")
        elif self.eps > 1:
            parts.append(f"e^{self.eps}")
        if self.tau:
            parts.append("t")
        parts.extend(f"a{i}" for i in self.var_indices())
        return " ".join(parts) if parts else "1"


def _mul_monomials(m1: Monomial, m2: Monomial) -> Monomial | None:
    """Reduced product of two reduced monomials; None when it reduces to zero."""
    tau = m1.tau + m2.tau
    if tau > 1:
        return None
    eps = m1.eps + m2.eps + (m1.mask & m2.mask).bit_count()
    if tau and eps:
        return None
    return Monomial(m1.mask | m2.mask, eps, tau)


class RingElement:
    """An element of R_n, stored as a frozenset of reduced monomials."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[Monomial] = ()):
        if not 0 <= n <= MAX_VARS:
            raise ValueError(f"number of variables must be in 0..{MAX_VARS}, got {n}")
        terms = frozenset(terms)
        for m in terms:
            if m.mask >> n:
                raise ValueError(f"monomial {m} uses a variable beyond a{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _check_compatible(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"mixed ambient rings: {self.n} vs {other.n} variables")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check_compatible(other)
        return RingElement(self.n, self.terms ^ other.terms)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check_compatible(other)
        acc: set[Monomial] = set()
        for m1 in self.terms:
            for m2 in other.terms:
                m = _mul_monomials(m1, m2)
                if m is not None:
                    acc.symmetric_difference_update((m,))
        return RingElement(self.n, acc)

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = RingElement(self.n, (Monomial(0, 0, 0),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_degree(self) -> int:
        """Largest total degree among terms; -1 for the zero element."""
        return max((m.degree for m in self.terms), default=-1)

    def degree_part(self, d: int) -> "RingElement":
        """Sum of the terms of total degree exactly d."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        return RingElement(self.n, (m for m in self.terms if m.degree == d))

    def min_eps_part(self, d: int) -> tuple[int, "RingElement"] | None:
        """Minimal e-exponent among degree-d terms and the sub-sum attaining it.

        Returns None when the degree-d part is zero.
        """
        part = [m for m in self.terms if m.degree == d]
        if not part:
            return None
        k = min(m.eps for m in part)
        return k, RingElement(self.n, (m for m in part if m.eps == k))

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=Monomial.sort_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(m.render() for m in self.sorted_terms())

    def __repr__(self) -> str:
        return f"<R_{self.n} element: {self}>"


class Ring:
    """Factory for elements of R_n; carries nothing but the variable count."""

    __slots__ = ("n",)

    def __init__(self, n: int):
        if not 0 <= n <= MAX_VARS:
            raise ValueError(f"number of variables must be in 0..{MAX_VARS}, got {n}")
        self.n = n

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.n == other.n

    def __hash__(self) -> int:
        return hash(("Ring", self.n))

    def __repr__(self) -> str:
        return f"Ring(n={self.n})"

    @property
    def zero(self) -> RingElement:
        return RingElement(self.n)

    @property
    def one(self) -> RingElement:
        return RingElement(self.n, (Monomial(0, 0, 0),))

    @property
    def eps(self) -> RingElement:
        return RingElement(self.n, (Monomial(0, 1, 0),))

    @property
    def tau(self) -> RingElement:
        return RingElement(self.n, (Monomial(0, 0, 1),))

    def a(self, i: int) -> RingElement:
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        return RingElement(self.n, (Monomial(1 << (i - 1), 0, 0),))

    def monomial(self, vars: Iterable[int] = (), eps_pow: int = 0, tau_pow: int = 0) -> RingElement:
        """Single monomial from a set of distinct variable indices (already reduced)."""
        mask = 0
        for i in vars:
            if not 1 <= i <= self.n:
                raise ValueError(f"variable index {i} out of range 1..{self.n}")
            if mask >> (i - 1) & 1:
                raise ValueError(f"repeated variable index {i}; use from_exponents for powers")
            mask |= 1 << (i - 1)
        return self.from_exponents([mask >> k & 1 for k in range(self.n)], eps_pow, tau_pow)

    def from_exponents(self, a_exps: Iterable[int], eps_pow: int = 0, tau_pow: int = 0) -> RingElement:
        """Build e^eps_pow * t^tau_pow * prod(ai^a_exps[i-1]) and reduce it.

        Applies the rewriting ai^k -> e^(k-1)*ai, t^k -> 0 for k >= 2, e*t -> 0.
        """
        a_exps = list(a_exps)
        if len(a_exps) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(a_exps)}")
        if eps_pow < 0 or tau_pow < 0 or any(e < 0 for e in a_exps):
            raise ValueError("exponents must be non-negative")
        if tau_pow >= 2:
            return self.zero
        mask = 0
        eps = eps_pow
        for i, e in enumerate(a_exps):
            if e:
                mask |= 1 << i
                eps += e - 1
        if tau_pow and eps:
            return self.zero
        return RingElement(self.n, (Monomial(mask, eps, tau_pow),))


def elementary_symmetric(ring: Ring, i: int) -> RingElement:
    """The i-th elementary symmetric polynomial s_i(a1,...,an) as a ring element."""
    if i < 0:
        raise ValueError("index must be non-negative")
    if i > ring.n:
        return ring.zero
    import itertools

    terms = []
    for combo in itertools.combinations(range(ring.n), i):
        mask = 0
        for b in combo:
            mask |= 1 << b
        terms.append(Monomial(mask, 0, 0))
    return RingElement(ring.n, terms)


def top_symmetric_class(ring: Ring) -> RingElement:
    """sum over i of e^(2^(n-1)-i) * s_i(a1..an), for n >= 1.

    This is the closed form of the one nonvanishing positive-degree symmetric
    class of the 2^n - 1 nontrivial square-class products; its minimal-e part
    is e^(2^(n-1)-n) * a1...an.
    """
    n = ring.n
    if n < 1:
        raise ValueError("needs at least one variable")
    half = 1 << (n - 1)
    out = ring.zero
    for i in range(1, n + 1):
        out = out + (ring.eps ** (half - i)) * elementary_symmetric(ring, i)
    return out

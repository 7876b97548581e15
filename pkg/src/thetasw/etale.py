"""Etale algebras as products of multiquadratic fields, and their total classes.

An algebra is a multiset of (field, multiplicity) factors.  Its total
Galois-Stiefel-Whitney class is the graded product of the factors' total
classes, truncated at a requested degree; the degree-0 entry is always 1.
By default the truncation is floor(degree/2), past which the classes of an
algebra vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .quadform import EVEN_TWISTED, MultiquadraticField, gsw_from_sw, sw_classes, trace_form
from .ring import Ring, RingElement


@dataclass(frozen=True)
class EtaleAlgebra:
    """A product of multiquadratic field factors with multiplicities."""

    n: int
    factors: tuple[tuple[MultiquadraticField, int], ...]

    def __post_init__(self):
        merged: dict[MultiquadraticField, int] = {}
        for E, mult in self.factors:
            if E.n != self.n:
                raise ValueError("factor ambient ring does not match the algebra")
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            merged[E] = merged.get(E, 0) + mult
        canonical = tuple(sorted(merged.items(), key=lambda item: item[0].sort_key()))
        object.__setattr__(self, "factors", canonical)

    @classmethod
    def of(cls, n: int, factors: Iterable[tuple[MultiquadraticField, int]]) -> "EtaleAlgebra":
        return cls(n, tuple(factors))

    @property
    def degree(self) -> int:
        return sum(mult * E.degree for E, mult in self.factors)


def product(A: EtaleAlgebra, B: EtaleAlgebra) -> EtaleAlgebra:
    """Product algebra: multiset union of factors; degrees add."""
    if A.n != B.n:
        raise ValueError("mixed ambient rings")
    return EtaleAlgebra(A.n, A.factors + B.factors)


def _series_mul(s: list[RingElement], t: list[RingElement], ring: Ring, max_degree: int) -> list[RingElement]:
    out = [ring.zero] * (max_degree + 1)
    for i, x in enumerate(s):
        if x.is_zero():
            continue
        for j, y in enumerate(t):
            if i + j > max_degree:
                break
            if y.is_zero():
                continue
            out[i + j] = out[i + j] + x * y
    return out


def _series_pow(s: list[RingElement], m: int, ring: Ring, max_degree: int) -> list[RingElement]:
    out = [ring.one] + [ring.zero] * max_degree
    base = list(s)
    while m:
        if m & 1:
            out = _series_mul(out, base, ring, max_degree)
        m >>= 1
        if m:
            base = _series_mul(base, base, ring, max_degree)
    return out


def alpha_total(A: EtaleAlgebra, max_degree: int | None = None, convention: str = EVEN_TWISTED) -> list[RingElement]:
    """Graded total class of A, as the list of its components alpha_0..alpha_max_degree.

    Computed factor by factor: the total class of a product of algebras is
    the product of their total classes, and each field factor contributes the
    twisted class list of its trace form.
    """
    if max_degree is None:
        max_degree = A.degree // 2
    if max_degree < 0:
        raise ValueError("truncation degree must be non-negative")
    ring = Ring(A.n)
    total = [ring.one] + [ring.zero] * max_degree
    for E, mult in A.factors:
        q = trace_form(E)
        sw = sw_classes(q, min(max_degree, q.rank))
        # classes beyond the rank vanish; pad before twisting so the twist at
        # index rank+1 still sees the top class
        sw = sw + [ring.zero] * (max_degree + 1 - len(sw))
        alpha = gsw_from_sw(sw, convention)
        total = _series_mul(total, _series_pow(alpha, mult, ring, max_degree), ring, max_degree)
    return total

"""Exact multivariate integer polynomials and the subset-product recursions.

The central object is the family of products over all subsets I of {1..n}

    big_phi(n, x0) = prod_I (x0 + sum_{i in I} x_i),

specialized to p_n = big_phi(n, 1) and q_n = big_phi(n, 1 + x_(n+1)).  These
expand quickly (p_5 has ~290k terms), so construction and multiplication run,
when possible, through a dense engine: coefficients are laid out in a box
indexed by exponent vectors, and products are delegated to GMP integer
multiplication via Kronecker substitution (one wide slot per lattice point).
Slot widths are chosen from exact coefficient-sum bounds, so results are
always exact; inputs that would not fit the dense budget fall back to sparse
dict arithmetic with arbitrary-precision coefficients.

A polynomial is stored sparsely as {exponent tuple: coefficient}; the mod-2
reduction keeps only the odd-coefficient exponents as a frozenset.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Mapping

import gmpy2
import numpy as np

from .ring import Ring, RingElement

PHI_BOUND = 6  # 2^n factors; beyond this full expansion is no longer desk-scale

_MAX_DENSE_BYTES = 1 << 28  # budget for one Kronecker operand / dense box


class IntPolynomial:
    """Sparse integer polynomial in a fixed number of variables (slots 0..nvars-1)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if nvars < 0:
            raise ValueError("variable count must be non-negative")
        clean: dict[tuple[int, ...], int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent vector {exp} has wrong length (expected {nvars})")
            if any(e < 0 for e in exp):
                raise ValueError("exponents must be non-negative")
            if c:
                clean[exp] = int(c)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "IntPolynomial":
        # trusted path: terms already well-formed and free of zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "terms", terms)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, nvars: int, c: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, slot: int) -> "IntPolynomial":
        if not 0 <= slot < nvars:
            raise ValueError(f"slot {slot} out of range 0..{nvars - 1}")
        exp = tuple(1 if k == slot else 0 for k in range(nvars))
        return cls(nvars, {exp: 1})

    # -- bookkeeping --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def var_degrees(self) -> tuple[int, ...]:
        degs = [0] * self.nvars
        for exp in self.terms:
            for k, e in enumerate(exp):
                if e > degs[k]:
                    degs[k] = e
        return tuple(degs)

    def abs_coeff_sum(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def extend(self, nvars: int) -> "IntPolynomial":
        """Reinterpret in a larger variable space (new trailing slots unused)."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable space")
        pad = (0,) * (nvars - self.nvars)
        return IntPolynomial._raw(nvars, {exp + pad: c for exp, c in self.terms.items()})

    def pol_part(self, i: int) -> "IntPolynomial":
        """Homogeneous component of total degree i."""
        return IntPolynomial._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == i})

    def mod2(self) -> "Mod2Polynomial":
        return Mod2Polynomial(self.nvars, frozenset(e for e, c in self.terms.items() if c & 1))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial.const(self.nvars, other)
        if not isinstance(other, IntPolynomial):
            raise TypeError(f"expected IntPolynomial or int, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return IntPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial(self.nvars)
        if self.is_nonneg() and other.is_nonneg():
            plan = _kronecker_plan(self, other)
            if plan is not None:
                return _kronecker_mul(self, other, plan)
        return self._mul_sparse(other)

    __rmul__ = __mul__

    def _mul_sparse(self, other: "IntPolynomial") -> "IntPolynomial":
        small, large = sorted((self, other), key=lambda f: len(f.terms))
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in small.terms.items():
            for e2, c2 in large.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, 0) + c1 * c2
                if v:
                    out[exp] = v
                else:
                    out.pop(exp, None)
        return IntPolynomial._raw(self.nvars, out)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = IntPolynomial.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"<IntPolynomial in {self.nvars} vars, {len(self.terms)} terms, degree {self.degree()}>"


# -- dense/Kronecker machinery ----------------------------------------------


def _kronecker_plan(a: IntPolynomial, b: IntPolynomial) -> tuple[tuple[int, ...], int] | None:
    """Box shape and limb count for an exact product, or None if over budget."""
    shape = tuple(da + db + 1 for da, db in zip(a.var_degrees(), b.var_degrees()))
    slots = math.prod(shape)
    bound = a.abs_coeff_sum() * b.abs_coeff_sum()
    limbs = max(1, -(-(bound.bit_length() + 1) // 64))
    if slots * limbs * 8 > _MAX_DENSE_BYTES:
        return None
    return shape, limbs


def _flat_strides(shape: tuple[int, ...]) -> tuple[int, ...]:
    strides = []
    acc = 1
    for s in shape:
        strides.append(acc)
        acc *= s
    return tuple(strides)


def _encode(f: IntPolynomial, shape: tuple[int, ...], limbs: int) -> gmpy2.mpz:
    strides = _flat_strides(shape)
    width = limbs * 8
    buf = bytearray(math.prod(shape) * width)
    for exp, c in f.terms.items():
        off = sum(e * s for e, s in zip(exp, strides)) * width
        buf[off : off + width] = c.to_bytes(width, "little")
    return gmpy2.mpz(int.from_bytes(buf, "little"))


def _decode(z: gmpy2.mpz, nvars: int, shape: tuple[int, ...], limbs: int) -> IntPolynomial:
    slots = math.prod(shape)
    raw = int(z).to_bytes(slots * limbs * 8, "little")
    arr = np.frombuffer(raw, dtype="<u8").reshape(slots, limbs)
    strides = _flat_strides(shape)
    if limbs == 1:
        flat = arr[:, 0]
        nz = np.nonzero(flat)[0]
        coeffs = flat[nz].tolist()
    else:
        nz = np.nonzero(arr.any(axis=1))[0]
        coeffs = []
        for row in arr[nz].tolist():
            c = 0
            for limb in reversed(row):
                c = (c << 64) | limb
            coeffs.append(c)
    exp_cols = [((nz // s) % d).tolist() for s, d in zip(strides, shape)]
    out = dict(zip(zip(*exp_cols), coeffs)) if len(shape) else ({(): coeffs[0]} if coeffs else {})
    return IntPolynomial._raw(nvars, out)


def _kronecker_mul(a: IntPolynomial, b: IntPolynomial, plan) -> IntPolynomial:
    shape, limbs = plan
    return _decode(_encode(a, shape, limbs) * _encode(b, shape, limbs), a.nvars, shape, limbs)


def _subsets(n: int):
    for r in range(n + 1):
        yield from itertools.combinations(range(n), r)


def big_phi(n: int, x0: IntPolynomial | int, nvars: int | None = None) -> IntPolynomial:
    """The subset product prod over I of (x0 + sum_{i in I} x_i), exactly over Z.

    Slots 0..n-1 are the summed variables x_1..x_n; x0 may use any slots of
    the ambient space (constants allowed).  Bounded at n <= 6 (2^n factors).
    """
    if not 0 <= n <= PHI_BOUND:
        raise ValueError(f"subset-product order must be in 0..{PHI_BOUND}, got {n}")
    if isinstance(x0, int):
        x0 = IntPolynomial.const(n if nvars is None else nvars, x0)
    elif nvars is not None and x0.nvars != nvars:
        raise ValueError("x0 does not live in the requested variable space")
    if x0.nvars < n:
        raise ValueError(f"need at least {n} slots, x0 lives in {x0.nvars}")

    m = x0.nvars
    x0_degs = x0.var_degrees()
    shape = tuple(
        (1 << (n - 1) if k < n else 0) + (1 << n) * x0_degs[k] + 1 for k in range(m)
    )
    s0 = x0.abs_coeff_sum()
    tot_bound = 1
    for r in range(n + 1):
        tot_bound *= (s0 + r) ** math.comb(n, r)

    if x0.is_nonneg():
        dense = _dense_subset_product(n, x0, shape, tot_bound)
        if dense is not None:
            return dense

    out = IntPolynomial.const(m, 1)
    for I in _subsets(n):
        factor = x0
        for i in I:
            factor = factor + IntPolynomial.variable(m, i)
        out = out * factor
    return out


def _dense_subset_product(
    n: int, x0: IntPolynomial, shape: tuple[int, ...], tot_bound: int
) -> IntPolynomial | None:
    if not shape or tot_bound >= 1 << 62 or math.prod(shape) * 8 > _MAX_DENSE_BYTES:
        return None
    acc = np.zeros(shape, dtype=np.int64)
    acc[(0,) * len(shape)] = 1
    for I in _subsets(n):
        terms = dict(x0.terms)
        for i in I:
            exp = tuple(1 if k == i else 0 for k in range(len(shape)))
            terms[exp] = terms.get(exp, 0) + 1
        nxt = np.zeros(shape, dtype=np.int64)
        for exp, c in terms.items():
            dst = tuple(slice(e, s) for e, s in zip(exp, shape))
            src = tuple(slice(0, s - e) for e, s in zip(exp, shape))
            nxt[dst] += c * acc[src]
        acc = nxt
    idx = np.nonzero(acc)
    coeffs = acc[idx].tolist()
    exp_cols = [axis.tolist() for axis in idx]
    return IntPolynomial._raw(len(shape), dict(zip(zip(*exp_cols), coeffs)))


def build_p(n: int) -> IntPolynomial:
    """p_n(x_1..x_n) = big_phi(n, 1), in n variables."""
    return big_phi(n, 1, nvars=n)


def build_q(n: int) -> IntPolynomial:
    """q_n(x_1..x_n; x_(n+1)) = big_phi(n, 1 + x_(n+1)), in n+1 variables."""
    one_plus_aux = IntPolynomial.const(n + 1, 1) + IntPolynomial.variable(n + 1, n)
    return big_phi(n, one_plus_aux)


def pol_part(f: IntPolynomial, i: int) -> IntPolynomial:
    """Homogeneous degree-i component of f."""
    return f.pol_part(i)


@dataclass(frozen=True)
class Mod2Polynomial:
    """Reduction of an integer polynomial mod 2: the set of odd-coefficient exponents."""

    nvars: int
    terms: frozenset[tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "terms", frozenset(tuple(e) for e in self.terms))
        for exp in self.terms:
            if len(exp) != self.nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp}")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Mod2Polynomial") -> "Mod2Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        return Mod2Polynomial(self.nvars, self.terms ^ other.terms)

    def __mul__(self, other: "Mod2Polynomial") -> "Mod2Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        acc: set[tuple[int, ...]] = set()
        for e1 in self.terms:
            for e2 in other.terms:
                acc.symmetric_difference_update((tuple(a + b for a, b in zip(e1, e2)),))
        return Mod2Polynomial(self.nvars, acc)

    def square(self) -> "Mod2Polynomial":
        # Frobenius: squaring doubles exponents in characteristic 2
        return Mod2Polynomial(self.nvars, frozenset(tuple(2 * e for e in exp) for exp in self.terms))

    def pol_part(self, i: int) -> "Mod2Polynomial":
        return Mod2Polynomial(self.nvars, frozenset(e for e in self.terms if sum(e) == i))

    def extend(self, nvars: int) -> "Mod2Polynomial":
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable space")
        pad = (0,) * (nvars - self.nvars)
        return Mod2Polynomial(nvars, frozenset(e + pad for e in self.terms))


def ring_image(f: Mod2Polynomial | IntPolynomial, ring: Ring) -> RingElement:
    """Image of f under x_i -> a_i in the quotient ring (x_i^k -> e^(k-1) x_i).

    Only the first ring.n slots may carry exponents; anything in a higher
    slot is a stray auxiliary variable and rejected.
    """
    if isinstance(f, IntPolynomial):
        f = f.mod2()
    out = ring.zero
    for exp in f.terms:
        if any(e for e in exp[ring.n :]):
            raise ValueError("polynomial uses auxiliary variables beyond the ring")
        out = out + ring.from_exponents(exp[: ring.n])
    return out


# -- identity verification -----------------------------------------------------

# frozen expansions of the first few subset products, exact over the integers
TABLE1: dict[str, tuple[int, dict[tuple[int, ...], int]]] = {
    "p0": (0, {(): 1}),
    "q0": (1, {(0,): 1, (1,): 1}),
    "p1": (1, {(0,): 1, (1,): 1}),
    "q1": (2, {(0, 0): 1, (1, 0): 1, (0, 1): 2, (1, 1): 1, (0, 2): 1}),
    "p2": (
        2,
        {
            (0, 0): 1,
            (1, 0): 2,
            (0, 1): 2,
            (2, 0): 1,
            (1, 1): 3,
            (0, 2): 1,
            (2, 1): 1,
            (1, 2): 1,
        },
    ),
    "q2": (
        3,
        {
            (0, 0, 0): 1,
            (0, 1, 0): 2,
            (1, 0, 0): 2,
            (0, 0, 1): 4,
            (2, 0, 0): 1,
            (1, 1, 0): 3,
            (0, 2, 0): 1,
            (0, 0, 2): 6,
            (1, 0, 1): 6,
            (0, 1, 1): 6,
            (2, 1, 0): 1,
            (1, 2, 0): 1,
            (1, 1, 1): 6,
            (2, 1, 1): 1,
            (0, 2, 1): 2,
            (1, 2, 1): 1,
            (2, 0, 1): 2,
            (0, 1, 2): 6,
            (1, 1, 2): 3,
            (1, 0, 2): 6,
            (0, 2, 2): 1,
            (2, 0, 2): 1,
            (0, 0, 3): 4,
            (0, 1, 3): 2,
            (1, 0, 3): 2,
            (0, 0, 4): 1,
        },
    ),
}


def table1() -> tuple[bool, str]:
    """Compare p0..p2, q0..q2 against their frozen integer expansions."""
    built = {
        "p0": build_p(0),
        "q0": build_q(0),
        "p1": build_p(1),
        "q1": build_q(1),
        "p2": build_p(2),
        "q2": build_q(2),
    }
    for name, (nvars, terms) in TABLE1.items():
        if built[name] != IntPolynomial(nvars, terms):
            return False, f"{name} differs from its frozen expansion"
    return True, ""


@dataclass(frozen=True)
class IdentityCheck:
    """One named identity instance, runnable to a (passed, detail) pair."""

    name: str
    n: int
    anchor: str
    run: Callable[[], tuple[bool, str]]


def _ok(cond: bool, detail: str) -> tuple[bool, str]:
    return (True, "") if cond else (False, detail)


def _check_recursion(n: int) -> tuple[bool, str]:
    lhs = build_p(n)
    rhs = build_p(n - 1).extend(n) * build_q(n - 1)
    return _ok(lhs == rhs, f"p_{n} != p_{n-1} * q_{n-1} over the integers")


def _check_degree(n: int) -> tuple[bool, str]:
    d = build_p(n).degree()
    return _ok(d == (1 << n) - 1, f"deg p_{n} = {d}, expected {(1 << n) - 1}")


def _check_additivity(n: int) -> tuple[bool, str]:
    m = n + 2  # slots n, n+1 hold the two offset variables
    y = IntPolynomial.variable(m, n)
    z = IntPolynomial.variable(m, n + 1)
    lhs = big_phi(n, y + z).mod2()
    rhs = big_phi(n, y).mod2() + big_phi(n, z).mod2()
    return _ok(lhs == rhs, "offset additivity fails mod 2")


def _check_low_degree_match(n: int) -> tuple[bool, str]:
    diff = build_p(n).extend(n + 1).mod2() + build_q(n).mod2()
    bad = [e for e in diff.terms if sum(e) < (1 << n)]
    return _ok(not bad, f"p_{n} and q_{n} differ mod 2 in degree < 2^{n}: {sorted(bad)[:3]}")


def _check_half_degree_recursion(n: int) -> tuple[bool, str]:
    half, quarter = 1 << (n - 1), 1 << (n - 2)
    lhs = build_p(n).pol_part(half).mod2()
    rhs = build_p(n - 1).pol_part(quarter).mod2().square().extend(n) + build_q(n - 1).pol_part(half).mod2()
    return _ok(lhs == rhs, "half-degree part does not satisfy the square-plus-q recursion")


def _check_vanishing_below_half(n: int) -> tuple[bool, str]:
    half = 1 << (n - 1)
    bad = [e for e in build_p(n).mod2().terms if 0 < sum(e) < half]
    return _ok(not bad, f"odd coefficients below degree 2^{n-1}: {sorted(bad)[:3]}")


def _check_top_of_q(n: int) -> tuple[bool, str]:
    lhs = build_q(n).pol_part(1 << n)
    rhs = big_phi(n, IntPolynomial.variable(n + 1, n))
    return _ok(lhs == rhs, "top part of q_n is not the subset product of the offset variable")


def _check_eps_power_product(n: int) -> tuple[bool, str]:
    ring = Ring(n)
    lhs = ring.one
    for i in range(1, n + 1):
        lhs = lhs * (ring.a(i) + ring.eps) ** (1 << (i - 1))
    rhs = ring.eps ** ((1 << n) - 1 - n)
    for i in range(1, n + 1):
        rhs = rhs * (ring.a(i) + ring.eps)
    return _ok(lhs == rhs, "power product of (ai + e) does not collapse to the e-power form")


def _check_two_factor_reduction(n: int) -> tuple[bool, str]:
    ring = Ring(n + 1)
    an, aux = ring.a(n), ring.a(n + 1)
    for r in range(n):
        for combo in itertools.combinations(range(1, n), r):
            s = aux
            for i in combo:
                s = s + ring.a(i)
            if (an + s) * s != (an + ring.eps) * s:
                return False, f"two-factor reduction fails for subset {combo}"
    return True, ""


def _check_half_degree_image(n: int) -> tuple[bool, str]:
    from .ring import top_symmetric_class

    ring = Ring(n)
    img = ring_image(build_p(n).pol_part(1 << (n - 1)), ring)
    return _ok(img == top_symmetric_class(ring), "half-degree image differs from sum e^(2^(n-1)-i) s_i")


def _check_symmetric_class_vanishing(n: int) -> tuple[bool, str]:
    ring = Ring(n)
    half = 1 << (n - 1)
    p = build_p(n)
    for i in range(p.degree() + 1):
        img = ring_image(p.pol_part(i), ring)
        if i == 0:
            if img != ring.one:
                return False, "constant image is not 1"
        elif i == half:
            if img.min_eps_part(half) != (half - n, ring.monomial(range(1, n + 1), eps_pow=half - n)):
                return False, "minimal-e part of the half-degree image is wrong"
        elif not img.is_zero():
            return False, f"image in degree {i} does not vanish"
    return True, ""


def identity_checks(n: int) -> list[IdentityCheck]:
    """All identity instances applicable at order n (each has its own exact bound)."""
    if not 0 <= n <= 5:
        raise ValueError(f"identity verification supports orders 0..5, got {n}")
    table: list[tuple[str, int, int, Callable[[int], tuple[bool, str]], str]] = [
        # (name, min_n, max_n, fn, anchor)
        ("degree", 0, 5, _check_degree, f"deg p_{n} = 2^{n} - 1"),
        ("recursion", 1, 5, _check_recursion, f"p_{n} = p_{n-1} * q_{n-1} exactly over the integers"),
        ("additivity", 0, 4, _check_additivity, f"order-{n} subset product is additive in its offset, mod 2"),
        ("low-degree-match", 0, 4, _check_low_degree_match, f"p_{n} and q_{n} agree mod 2 below degree 2^{n}"),
        ("vanishing-below-half", 1, 5, _check_vanishing_below_half, f"p_{n} vanishes mod 2 in degrees 1..2^{n-1}-1"),
        ("half-degree-recursion", 2, 5, _check_half_degree_recursion,
         f"half-degree part of p_{n} is the previous square plus the q-part, mod 2"),
        ("top-of-q", 0, 4, _check_top_of_q, f"top part of q_{n} is the subset product of the offset variable"),
        ("eps-power-product", 1, 5, _check_eps_power_product,
         f"prod (ai + e)^(2^(i-1)) = e^(2^{n}-1-{n}) prod (ai + e) in the quotient ring"),
        ("two-factor-reduction", 1, 5, _check_two_factor_reduction,
         f"(a{n} + s)(s) = (a{n} + e)(s) for each offset sum s, in the quotient ring"),
        ("half-degree-image", 1, 5, _check_half_degree_image,
         f"half-degree image of p_{n} equals sum e^(2^({n}-1)-i) s_i"),
        ("symmetric-class-vanishing", 1, 5, _check_symmetric_class_vanishing,
         f"images of p_{n} parts vanish except in degrees 0 and 2^({n}-1)"),
    ]
    out = []
    for name, lo, hi, fn, anchor in table:
        if lo <= n <= hi:
            out.append(IdentityCheck(name, n, anchor, lambda fn=fn, n=n: fn(n)))
    return out


def verify_identities(n: int) -> list[tuple[IdentityCheck, bool, str]]:
    """Run every identity applicable at order n; returns (check, passed, detail) rows."""
    results = []
    for check in identity_checks(n):
        passed, detail = check.run()
        results.append((check, passed, detail))
    return results

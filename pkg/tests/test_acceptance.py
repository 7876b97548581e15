"""Acceptance battery: one test per criterion, each timed against its budget.

Every check here is an exact equality in a finite ring or an exact integer
identity; the only tolerances are wall-time budgets.  Run with `pytest -s`
to see the per-criterion timing lines.
"""

import itertools
import time

import props
from thetasw.etale import EtaleAlgebra, alpha_total
from thetasw.polyrec import build_p, build_q, ring_image, table1
from thetasw.quadform import DiagonalForm, MultiquadraticField, pure_field, sw_classes, w2_conic
from thetasw.ring import Ring, top_symmetric_class
from thetasw.symbols import SquareClass, residue_chain, substitute, symbol
from thetasw.theta import decompose, multiplicity_table, orbit_multiplicities
from thetasw.verify import run_suite


class Criterion:
    def __init__(self, number, name, budget_s):
        self.number, self.name, self.budget_s = number, name, budget_s
        self.t0 = time.perf_counter()

    def done(self):
        elapsed = time.perf_counter() - self.t0
        print(f"[criterion {self.number}] {self.name}: PASS ({elapsed:.2f} s < {self.budget_s} s)")
        assert elapsed < self.budget_s, f"criterion {self.number} exceeded its {self.budget_s} s budget"


def test_criterion_1_genus3_decompositions():
    c = Criterion(1, "genus-3 odd/even decompositions", 1.0)
    odd = orbit_multiplicities(3, "odd")
    assert odd == {
        frozenset(): 4,
        frozenset({1}): 2,
        frozenset({2}): 2,
        frozenset({3}): 2,
        frozenset({1, 2}): 1,
        frozenset({1, 3}): 1,
        frozenset({2, 3}): 1,
    }
    assert decompose(3, "odd").degree == 28
    even = orbit_multiplicities(3, "even")
    assert even == {**odd, frozenset({1, 2, 3}): 1}
    assert decompose(3, "even").degree == 36
    c.done()


def test_criterion_2_degree2_pullback_identity():
    c = Criterion(2, "degree-2 class identity and second-curve checks", 1.0)
    R3 = Ring(3)
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
    assert aW[1] == symbol([SquareClass(vars=frozenset({1, 2, 3}))], R3)
    assert aW[2] == R3.monomial((1, 2)) + R3.monomial((1, 3)) + R3.monomial((2, 3))

    a_odd = alpha_total(decompose(3, "odd"), 2)
    assert a_odd[2] == aW[2] + R3.eps * aW[1]

    # second curve: branch points rational over F' = F(sqrt(-a2))
    R2 = Ring(2)
    twisted = MultiquadraticField(2, (SquareClass(sign=1, vars=frozenset({2})),))
    S2 = EtaleAlgebra(2, ((pure_field(2, ()), 4), (twisted, 12)))
    assert alpha_total(S2, 2)[2] == R2.zero

    q = DiagonalForm(
        2, (SquareClass.of_var(1), SquareClass.of_var(2), SquareClass(vars=frozenset({1, 2})))
    )
    w2 = w2_conic(q)
    assert not w2.is_zero()
    assert substitute(w2, {1: SquareClass.of_var(1), 2: SquareClass.minus_one()}, R2) == R2.zero
    c.done()


def test_criterion_3_multiplicity_formulas():
    c = Criterion(3, "orbit multiplicity formulas for genus 2..7", 5.0)
    for g in range(2, 8):
        table = multiplicity_table(g)
        for A, (n_odd, n_even) in table.items():
            if len(A) < g:
                assert n_odd == n_even == 1 << (g - 1 - len(A))
            else:
                assert (n_odd, n_even) == (0, 1)
        assert sum((1 << len(A)) * no for A, (no, _) in table.items()) == (1 << (g - 1)) * (
            (1 << g) - 1
        )
        assert sum((1 << len(A)) * ne for A, (_, ne) in table.items()) == (1 << (g - 1)) * (
            (1 << g) + 1
        )
    c.done()


def test_criterion_4_integer_recursion():
    c = Criterion(4, "frozen expansions and the exact integer recursion", 5.0)
    ok, detail = table1()
    assert ok, detail
    for n in range(1, 6):
        pn = build_p(n)
        assert pn.degree() == (1 << n) - 1
        assert pn == build_p(n - 1).extend(n) * build_q(n - 1)
    c.done()


def test_criterion_5_mod2_identity_battery():
    c = Criterion(5, "mod-2 and quotient-ring polynomial identities", 30.0)
    report = run_suite("polyrec", n_range=(0, 5))
    failed = [chk for chk in report.checks if not chk.passed]
    assert not failed, f"failed identities: {[chk.id for chk in failed]}"
    ids = {chk.id for chk in report.checks}
    for want in ("additivity-n4", "low-degree-match-n4", "vanishing-below-half-n5",
                 "half-degree-recursion-n5", "half-degree-image-n5"):
        assert want in ids
    c.done()


def test_criterion_6_symmetric_classes_two_routes():
    c = Criterion(6, "symmetric classes by two independent routes", 60.0)
    for n in range(1, 6):
        ring = Ring(n)
        half = 1 << (n - 1)
        # route one: generating product over the 2^n - 1 nontrivial square classes
        classes = [
            SquareClass(vars=frozenset(combo))
            for r in range(1, n + 1)
            for combo in itertools.combinations(range(1, n + 1), r)
        ]
        form = DiagonalForm(n, tuple(classes))
        sigma = sw_classes(form, form.rank)
        for i in range(1, len(sigma)):
            if i != half:
                assert sigma[i].is_zero(), f"sigma_{i} nonzero at n={n}"
        assert sigma[half] == top_symmetric_class(ring)
        assert sigma[half].min_eps_part(half) == (
            half - n,
            ring.monomial(range(1, n + 1), eps_pow=half - n),
        )
        # route two: images of the homogeneous parts of the subset product
        pn = build_p(n)
        for i in range(pn.degree() + 1):
            want = ring.one if i == 0 else sigma[i] if i < len(sigma) else ring.zero
            assert ring_image(pn.pol_part(i), ring) == want
    # the n=3 top class, term for term
    R3 = Ring(3)
    frozen = (
        R3.monomial((1, 2, 3), eps_pow=1)
        + (R3.eps**2) * (R3.monomial((1, 2)) + R3.monomial((1, 3)) + R3.monomial((2, 3)))
        + (R3.eps**3) * (R3.a(1) + R3.a(2) + R3.a(3))
    )
    assert sw_classes(DiagonalForm(3, tuple(
        SquareClass(vars=frozenset(combo))
        for r in range(1, 4)
        for combo in itertools.combinations((1, 2, 3), r)
    )), 4)[4] == frozen
    c.done()


def test_criterion_7_ramification_argument():
    c = Criterion(7, "residue-chain separation of the top classes, genus 3..5", 120.0)
    for g in (3, 4, 5):
        ring = Ring(g)
        quarter, half = 1 << (g - 2), 1 << (g - 1)
        a_odd = alpha_total(decompose(g, "odd"), quarter)
        a_all = alpha_total(decompose(g, "all"), half)
        for i in range(1, quarter):
            assert a_odd[i].is_zero()
        for i in range(1, half):
            assert a_all[i].is_zero()
        chain = range(1, g + 1)
        assert residue_chain(a_all[half], chain) == ring.monomial((), eps_pow=half - g)
        assert residue_chain(a_odd[quarter], chain) == ring.zero
    c.done()


def test_criterion_8_property_suites():
    c = Criterion(8, "randomized property suites, 200 cases each", 120.0)
    for name in sorted(props.FAMILIES):
        props.FAMILIES[name](200)
    c.done()

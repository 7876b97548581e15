"""Arithmetic and grading in the quotient ring."""

import pytest

from thetasw.ring import Monomial, Ring, RingElement, elementary_symmetric, top_symmetric_class


@pytest.fixture
def R3():
    return Ring(3)


def test_char_two_addition(R3):
    a1 = R3.a(1)
    assert a1 + a1 == R3.zero
    x = R3.eps * a1 + a1 * R3.a(2)
    assert x == R3.monomial((1,), eps_pow=1) + R3.monomial((1, 2))
    assert len(x.terms) == 2


def test_square_rewrites_to_eps(R3):
    assert R3.a(1) * R3.a(1) == R3.monomial((1,), eps_pow=1)


def test_tau_relations(R3):
    assert R3.tau * R3.tau == R3.zero
    assert R3.tau * R3.eps == R3.zero
    assert (R3.tau * R3.a(1)) * R3.a(1) == R3.zero  # t * e a1 dies


def test_degree_part(R3):
    x = R3.one + R3.monomial((1,), eps_pow=1) + R3.monomial((1, 2))
    assert x.degree_part(2) == R3.monomial((1,), eps_pow=1) + R3.monomial((1, 2))
    assert x.degree_part(0) == R3.one
    assert x.degree_part(7) == R3.zero
    assert x.max_degree == 2


def test_grading_of_products(R3):
    import random

    rng = random.Random(11)
    from props import random_element

    for _ in range(50):
        x, y = random_element(rng, R3), random_element(rng, R3)
        prod = x * y
        for d in range(prod.max_degree + 1):
            conv = R3.zero
            for p in range(d + 1):
                conv = conv + x.degree_part(p) * y.degree_part(d - p)
            assert prod.degree_part(d) == conv


def test_min_eps_part(R3):
    x = R3.monomial((1,), eps_pow=3) + R3.monomial((1, 2), eps_pow=2)
    assert x.min_eps_part(4) == (2, R3.monomial((1, 2), eps_pow=2))
    assert x.min_eps_part(3) is None
    y = R3.tau * R3.a(1) + R3.monomial((2,), eps_pow=1)  # t-terms carry e-exponent 0
    assert y.min_eps_part(2) == (0, R3.tau * R3.a(1))


def test_from_exponents_reduction(R3):
    # a1^3 -> e^2 a1, t^2 -> 0, e t -> 0
    assert R3.from_exponents([3, 0, 0]) == R3.monomial((1,), eps_pow=2)
    assert R3.from_exponents([0, 0, 0], tau_pow=2) == R3.zero
    assert R3.from_exponents([1, 0, 0], eps_pow=1, tau_pow=1) == R3.zero
    assert R3.from_exponents([1, 2, 0], tau_pow=1) == R3.zero  # reduced eps kills t


def test_powers(R3):
    x = R3.one + R3.a(1)
    assert x**0 == R3.one
    assert x**2 == R3.one + R3.monomial((1,), eps_pow=1)  # frobenius
    with pytest.raises(ValueError):
        x**-1


def test_mixed_ring_error(R3):
    with pytest.raises(ValueError):
        R3.a(1) + Ring(2).a(1)
    with pytest.raises(ValueError):
        R3.a(1) * Ring(4).a(1)
    with pytest.raises(ValueError):
        R3.a(4)
    with pytest.raises(ValueError):
        Ring(64)


def test_rendering_grammar(R3):
    assert str(R3.zero) == "0"
    assert str(R3.one) == "1"
    assert str(R3.eps**3) == "e^3"
    assert str(R3.tau) == "t"
    assert str(R3.tau * R3.a(2)) == "t a2"
    x = R3.monomial((1, 2)) + R3.monomial((1, 3)) + R3.monomial((2, 3)) + R3.monomial((1,), eps_pow=1)
    assert str(x) == "a1 a2 + a1 a3 + a2 a3 + e a1"


def test_canonical_term_order():
    R = Ring(2)
    x = R.monomial((1, 2)) + R.eps * R.eps + R.tau * R.a(1) + R.monomial((2,), eps_pow=1)
    # degree 2 everywhere: then eps ascending, then tau, then variables
    assert str(x) == "a1 a2 + t a1 + e a2 + e^2"


def test_elementary_symmetric(R3):
    assert elementary_symmetric(R3, 0) == R3.one
    assert elementary_symmetric(R3, 1) == R3.a(1) + R3.a(2) + R3.a(3)
    assert elementary_symmetric(R3, 3) == R3.monomial((1, 2, 3))
    assert elementary_symmetric(R3, 4) == R3.zero


def test_top_symmetric_class(R3):
    want = (
        R3.monomial((1, 2, 3), eps_pow=1)
        + (R3.eps**2) * elementary_symmetric(R3, 2)
        + (R3.eps**3) * elementary_symmetric(R3, 1)
    )
    assert top_symmetric_class(R3) == want
    assert top_symmetric_class(Ring(1)) == Ring(1).a(1)


def test_immutability(R3):
    x = R3.a(1)
    with pytest.raises(AttributeError):
        x.n = 5
    assert hash(x) == hash(R3.a(1))


def test_monomial_validation():
    with pytest.raises(ValueError):
        RingElement(1, (Monomial(0b10, 0, 0),))  # variable beyond a1

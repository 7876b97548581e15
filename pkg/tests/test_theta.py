"""Theta-characteristic combinatorics: canonical forms, orbits, multiplicities."""

import itertools

import pytest

from thetasw.theta import (
    AlphaClass,
    GaloisAction,
    ThetaChar,
    canonical_alpha,
    canonicalize,
    decompose,
    enumerate_thetas,
    field_of_definition,
    multiplicity_table,
    orbit,
    orbit_multiplicities,
    parity,
    translate,
)


def test_canonicalize_examples():
    full_minus_pair = set(range(1, 9)) - {1, 2}
    assert canonicalize(3, full_minus_pair).T == frozenset({1, 2})
    assert canonicalize(3, {1, 3, 8}).T == frozenset({1, 3})
    t = canonicalize(3, {5, 4, 8, 7, 1})
    assert canonicalize(3, t.T) == t


def test_canonicalize_complement_identification():
    for g in (2, 3, 4):
        labels = range(1, 2 * g + 3)
        full = frozenset(labels)
        for combo in itertools.combinations(labels, g + 1):
            assert canonicalize(g, combo) == canonicalize(g, full - frozenset(combo))


def test_noncanonical_rejected():
    with pytest.raises(ValueError):
        ThetaChar(3, frozenset({1}))  # wrong parity
    with pytest.raises(ValueError):
        ThetaChar(3, frozenset(range(1, 7)))  # too large
    with pytest.raises(ValueError):
        ThetaChar(1, frozenset())  # genus out of range
    with pytest.raises(ValueError):
        canonicalize(3, {0, 1})


def test_parity_rule():
    assert parity(canonicalize(3, ())) == "even"
    assert parity(canonicalize(3, {1, 2})) == "odd"
    assert parity(canonicalize(4, {1})) == "even"  # 1 = 5 mod 4
    assert parity(canonicalize(4, {1, 2, 3})) == "odd"


def test_enumeration_counts():
    assert len(enumerate_thetas(2, "all")) == 16
    assert len(enumerate_thetas(3, "odd")) == 28
    assert len(enumerate_thetas(3, "even")) == 36
    for g in range(2, 7):
        odd, even = enumerate_thetas(g, "odd"), enumerate_thetas(g, "even")
        assert len(odd) == (1 << (g - 1)) * ((1 << g) - 1)
        assert len(even) == (1 << (g - 1)) * ((1 << g) + 1)
        assert odd | even == enumerate_thetas(g, "all")
    with pytest.raises(ValueError):
        enumerate_thetas(8, "all")
    with pytest.raises(ValueError):
        enumerate_thetas(3, "sideways")


def test_field_of_definition_examples():
    act = GaloisAction.default(3)
    assert field_of_definition(canonicalize(3, {1, 3}), act) == frozenset({1, 2})
    assert field_of_definition(canonicalize(3, {1, 2}), act) == frozenset()
    assert field_of_definition(canonicalize(3, {7, 8}), act) == frozenset()


def test_field_of_definition_same_for_both_representatives():
    for g in (3, 4):
        act = GaloisAction.default(g)
        labels = range(1, 2 * g + 3)
        full = frozenset(labels)
        for combo in itertools.combinations(labels, g + 1):
            T = frozenset(combo)
            a = {j for j, (lo, hi) in enumerate(act.pairs, 1) if (lo in T) != (hi in T)}
            comp = full - T
            b = {j for j, (lo, hi) in enumerate(act.pairs, 1) if (lo in comp) != (hi in comp)}
            assert a == b


def test_orbits():
    act = GaloisAction.default(3)
    fixed = canonicalize(3, {1, 2})
    assert orbit(fixed, act) == frozenset({fixed})
    four = orbit(canonicalize(3, {1, 3}), act)
    assert len(four) == 4
    assert four == frozenset(canonicalize(3, {i, j}) for i in (1, 2) for j in (3, 4))


def test_orbit_sizes_match_field_of_definition():
    for g in (2, 3, 4):
        act = GaloisAction.default(g)
        for t in enumerate_thetas(g, "all"):
            assert len(orbit(t, act)) == 1 << len(field_of_definition(t, act))
    # exhaustively up to genus 6, one orbit computation per class
    for g in (5, 6):
        act = GaloisAction.default(g)
        remaining = set(enumerate_thetas(g, "all"))
        while remaining:
            t = remaining.pop()
            orb = orbit(t, act)
            assert len(orb) == 1 << len(field_of_definition(t, act))
            remaining -= orb


def test_decompose_g3():
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
    even = orbit_multiplicities(3, "even")
    assert even == {**odd, frozenset({1, 2, 3}): 1}
    assert decompose(3, "odd").degree == 28
    assert decompose(3, "even").degree == 36


def test_all_is_odd_times_even():
    from thetasw.etale import product

    for g in (2, 3, 4):
        assert decompose(g, "all") == product(decompose(g, "odd"), decompose(g, "even"))


def test_multiplicity_closed_forms():
    for g in (2, 3, 4, 5):
        table = multiplicity_table(g)
        assert len(table) == 1 << g
        for A, (n_odd, n_even) in table.items():
            if len(A) < g:
                assert n_odd == n_even == 1 << (g - 1 - len(A))
            else:
                assert (n_odd, n_even) == (0, 1)
    assert multiplicity_table(5)[frozenset()] == (16, 16)


def test_custom_pairing_gives_same_profile():
    act = GaloisAction(3, ((1, 4), (2, 5), (3, 6)))
    table = {
        len(A): mult for A, mult in orbit_multiplicities(3, "odd", act).items()
    }  # collapses by symmetry
    default_table = {}
    for A, mult in orbit_multiplicities(3, "odd").items():
        default_table[len(A)] = mult
    assert table == default_table


def test_action_validation():
    with pytest.raises(ValueError):
        GaloisAction(3, ((1, 2), (3, 4)))  # wrong number of pairs
    with pytest.raises(ValueError):
        GaloisAction(3, ((1, 2), (3, 4), (4, 5)))  # not a partition
    act = GaloisAction.default(3)
    with pytest.raises(ValueError):
        act.apply(4, canonicalize(3, {1, 2}))
    with pytest.raises(ValueError):
        orbit(canonicalize(4, {1, 2}), act)


def test_alpha_class_and_translation():
    a = canonical_alpha(3, {1, 2, 8})
    assert a.T == frozenset({1, 2})
    b = canonical_alpha(3, set(range(1, 8)))
    assert b.T == frozenset()  # complement of everything-but-last
    with pytest.raises(ValueError):
        AlphaClass(3, frozenset({8}))

    t = canonicalize(3, {1, 2})
    moved = translate(t, a)
    assert moved == canonicalize(3, ())
    # translating by a class and back is the identity
    thetas = enumerate_thetas(3, "all")
    assert {translate(translate(t, a), a) for t in thetas} == thetas


def test_translation_preserves_nothing_but_the_set():
    # parity is not preserved by translation in general
    t = canonicalize(3, ())
    a = canonical_alpha(3, {1, 3})
    assert parity(t) == "even" and parity(translate(t, a)) == "odd"

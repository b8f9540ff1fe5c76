"""Cascade arithmetic: representations, evaluation, complements, Lovász form."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kkcliques.cascade import (
    Cascade,
    binom_exact,
    binom_inverse,
    binom_real,
    cascade_eval,
    cascade_of,
    complement_cascade,
    k_colex,
    k_via_complement,
    lovasz_clique_bound,
    shadow_colex,
)
from kkcliques.errors import InternalCheckError


def test_cascade_of_known_values():
    assert cascade_of(7, 3).entries == (4, 3)
    assert cascade_of(7, 3).level == 3
    assert cascade_of(0, 3).entries == ()
    assert cascade_of(10, 3).entries == (5,)
    assert cascade_of(9, 3).entries == (4, 3, 2)
    assert cascade_of(1, 5).entries == (5,)
    # level 1: singleton entry m
    assert cascade_of(12, 1).entries == (12,)


def test_cascade_strictness_and_value():
    for s in (2, 3, 5):
        for m in range(0, 300):
            c = cascade_of(m, s)
            assert c.is_strict()
            assert c.value() == m
            assert cascade_eval(c, s) == m


def test_cascade_eval_other_levels():
    c = cascade_of(7, 3)          # (4, 3)
    assert cascade_eval(c, 4) == 2     # C(4,4) + C(3,3)
    assert cascade_eval(c, 2) == 9     # C(4,2) + C(3,1)
    assert cascade_eval(c, 1) == 5     # C(4,1) + C(3,0)... stops at level 0
    assert cascade_eval(c, 5) == 0


def test_cascade_rejects_bad_input():
    with pytest.raises(ValueError):
        cascade_of(-1, 3)
    with pytest.raises(ValueError):
        cascade_of(5, 0)


@settings(max_examples=200, deadline=None)
@given(m=st.integers(min_value=0, max_value=10**12), s=st.integers(min_value=1, max_value=10))
def test_cascade_round_trip_property(m, s):
    c = cascade_of(m, s)
    assert cascade_eval(c, s) == m
    assert c.is_strict()


def test_k_colex_known_values():
    assert k_colex(7, 3, 4) == 2
    assert k_colex(7, 3, 5) == 0
    assert k_colex(10, 3, 5) == 1      # C_3(10) = K_5
    assert k_colex(comb(9, 4), 4, 6) == comb(9, 6)
    # t = s convention: every edge is its own s-clique
    for m in (0, 1, 7, 35):
        assert k_colex(m, 3, 3) == m


def test_shadow_colex_known_values():
    assert shadow_colex(7, 3, 2) == 9
    assert shadow_colex(7, 3, 1) == 5
    assert shadow_colex(1, 3, 2) == 3
    assert shadow_colex(0, 3, 2) == 0
    # shadow of a complete layer is the complete lower layer
    assert shadow_colex(comb(8, 3), 3, 2) == comb(8, 2)


def test_shadow_colex_monotone_in_m():
    for s, q in ((3, 2), (3, 1), (4, 2)):
        prev = 0
        for m in range(1, 200):
            cur = shadow_colex(m, s, q)
            assert cur >= prev
            prev = cur


def test_binom_exact_conventions():
    assert binom_exact(5, 2) == 10
    assert binom_exact(3, 5) == 0
    assert binom_exact(0, 0) == 1
    assert binom_exact(-1, 2) == 0


def test_binom_real_exact_rational():
    assert binom_real(Fraction(9, 2), 2) == Fraction(63, 8)
    assert binom_real(4, 2) == 6
    assert binom_real(Fraction(7, 2), 5) == Fraction(7 * 5 * 3 * 1 * -1, 2**5 * 120)


def test_binom_inverse_integer_and_real():
    assert binom_inverse(6, 2) == 4
    assert binom_inverse(binom_exact(1000, 7), 7) == 1000
    x = binom_inverse(7, 2)
    assert isinstance(x, float)
    assert abs(x * (x - 1) / 2 - 7) < 1e-9
    assert binom_inverse(0, 3) == 2  # C(2,3) = 0 at the domain floor


@pytest.mark.parametrize("s,n", [(2, 6), (3, 6), (3, 7), (2, 9)])
def test_complement_cascade_bridge(s, n):
    total = comb(n, s)
    for m in range(0, total + 1):
        co = complement_cascade(m, s, n)
        assert co == cascade_of(total - m, n - s)


def test_complement_cascade_entry_structure():
    # entries of m's cascade and its complement partition {b+1..n-1} above
    # a shared bottom entry b
    m, s, n = 7, 3, 5
    c = cascade_of(m, s)
    co = complement_cascade(m, s, n)
    assert c.entries[-1] == co.entries[-1]
    upper = set(c.entries[:-1]) | set(co.entries[:-1])
    assert upper == set(range(c.entries[-1] + 1, n))


@pytest.mark.parametrize("s,n", [(2, 7), (3, 6), (3, 8)])
def test_k_via_complement_matches_k_colex(s, n):
    for m in range(0, comb(n, s) + 1):
        for t in range(s, n + 1):
            assert k_via_complement(m, s, t, n) == k_colex(m, s, t)


def test_k_via_complement_on_full_layer():
    assert k_via_complement(comb(6, 3), 3, 6, 6) == 1


def test_lovasz_known_values():
    assert lovasz_clique_bound(comb(7, 3), 3, 5) == comb(7, 5)
    assert lovasz_clique_bound(7, 3, 5) == 0    # x ~ 4.27 < 5
    v = lovasz_clique_bound(7, 3, 4)
    assert v >= 2 and isinstance(v, float)


def test_lovasz_dominates_k_colex():
    for s in (2, 3):
        for m in range(0, comb(9, s) + 1):
            for t in range(s, 10):
                lb = lovasz_clique_bound(m, s, t)
                kc = k_colex(m, s, t)
                assert lb >= kc or abs(lb - kc) < 1e-9
                if m and binom_inverse(m, s).__class__ is int:
                    r = binom_inverse(m, s)
                    if t <= r:
                        assert lb == kc == comb(r, t)


def test_cascade_is_frozen_value_object():
    c = Cascade(3, (4, 3))
    with pytest.raises(AttributeError):
        c.level = 5
    assert c == cascade_of(7, 3)

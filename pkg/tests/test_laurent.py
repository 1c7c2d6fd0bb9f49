from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinkit.errors import InadmissibleTriple, InexactDivision, MalformedPD
from skeinkit.laurent import (A, DELTA, ONE, ZERO, LaurentFraction, LaurentPoly,
                              delta, delta_factorial, is_admissible, pack,
                              parse_poly, quotient_degree, theta, to_text, unpack)

polys = st.dictionaries(st.integers(-30, 30), st.integers(-10**6, 10**6),
                        max_size=8).map(LaurentPoly)
big_polys = st.dictionaries(st.integers(-300, 300), st.integers(-10**30, 10**30),
                            min_size=200, max_size=260).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@settings(max_examples=20, deadline=None)
@given(big_polys, big_polys)
def test_large_product_matches_schoolbook(p, q):
    school = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            school[e1 + e2] = school.get(e1 + e2, 0) + c1 * c2
    assert p * q == LaurentPoly(school)


@given(polys, polys)
def test_exact_division_roundtrip(p, q):
    if not q:
        return
    assert (p * q).exact_div(q) == p


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        (A + ONE).exact_div(A * A + ONE)


@given(polys)
def test_text_roundtrip(p):
    assert parse_poly(to_text(p)) == p


@given(st.dictionaries(st.integers(-20, 20), st.integers(-127, 127), max_size=10))
def test_pack_unpack(terms):
    terms = {e: c for e, c in terms.items() if c}
    lo = min(terms, default=0)
    assert unpack(pack(terms, lo, 8), lo, 8) == terms


def test_parse_rejects_garbage():
    with pytest.raises(MalformedPD):
        parse_poly("A^2 + x")


def test_degrees_of_zero():
    assert ZERO.max_deg == float("-inf")
    assert ZERO.min_deg == float("inf")


def test_delta_values():
    assert delta(0) == ONE
    assert delta(1) == DELTA
    for n in range(2, 8):
        assert delta(n) == DELTA * delta(n - 1) - delta(n - 2)
        assert delta(n).max_deg == 2 * n
        assert delta(n).min_deg == -2 * n


def test_delta_factorial():
    assert delta_factorial(3) == delta(1) * delta(2) * delta(3)
    assert delta_factorial(-1) == ONE


def test_admissibility():
    assert is_admissible(2, 2, 2)
    assert not is_admissible(1, 1, 1)
    assert not is_admissible(4, 1, 1)


def test_theta_small_values():
    # theta(a, a, 0) is the loop value Delta_a
    for a in range(5):
        assert theta(a, a, 0) == delta(a)
    # theta(1, 1, 2) is Delta_2 by fusion of two parallel strands
    assert theta(1, 1, 2) == delta(2)
    assert not theta(2, 2, 2).is_polynomial()


def test_theta_symmetric():
    for a, b, c in [(1, 2, 3), (2, 3, 3), (4, 2, 2), (3, 4, 5)]:
        t = theta(a, b, c)
        assert t == theta(b, c, a) == theta(c, a, b) == theta(b, a, c)


def test_theta_inadmissible():
    with pytest.raises(InadmissibleTriple):
        theta(1, 1, 1)
    with pytest.raises(InadmissibleTriple):
        quotient_degree(1, 1, 1)


def test_quotient_degree_matches_fraction():
    for a, b, c in [(2, 2, 2), (3, 3, 2), (4, 4, 4), (5, 5, 2)]:
        q = LaurentFraction(delta(c)) / theta(a, b, c)
        assert q.max_deg == quotient_degree(c, a, b)


def test_fraction_arithmetic():
    f = LaurentFraction(ONE, DELTA)
    assert f * DELTA == ONE
    assert f + f == LaurentFraction(2, DELTA)
    assert (f - f).is_zero()
    assert f.evaluate(1) == Fraction(-1, 2)

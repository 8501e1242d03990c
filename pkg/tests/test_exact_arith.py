from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unipotent_flip.exact_arith import RatPoly, format_rat, parse_rat, q_integer

rats = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
polys = st.dictionaries(st.integers(-4, 8), rats, max_size=5).map(RatPoly)
divisors = st.dictionaries(st.integers(0, 4), rats.filter(bool), min_size=1, max_size=3).map(RatPoly)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == RatPoly()
    assert p * 1 == p


@given(polys)
def test_substitutions_are_involutions(p):
    assert p.substitute_neg().substitute_neg() == p
    assert p.substitute_inverse().substitute_inverse() == p


@given(polys, polys)
def test_substitute_neg_is_multiplicative(p, q):
    assert (p * q).substitute_neg() == p.substitute_neg() * q.substitute_neg()


@given(polys, divisors)
def test_divmod(p, d):
    if not p.is_polynomial():
        p = p.shift(-p.valuation())
    quo, rem = p.divmod(d)
    assert quo * d + rem == p
    assert rem.is_zero() or rem.degree() < d.degree()


def test_evaluation_and_degree():
    u = RatPoly.monomial(1)
    p = u * (u**2 + 1) / 2
    assert p(3) == 15
    assert p.degree_and_valuation() == (3, 1)
    assert q_integer(3) == RatPoly.from_list([1, 1, 1])


def test_json_round_trip():
    p = RatPoly({0: Fraction(-1, 3), 5: 2})
    assert p.to_json() == [[0, "-1/3"], [5, "2/1"]]
    assert RatPoly.from_json(p.to_json()) == p


def test_rational_strings():
    assert format_rat(Fraction(6, -4)) == "-3/2"
    assert format_rat(3) == "3/1"
    assert parse_rat("-3/2") == Fraction(-3, 2)


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        RatPoly.from_list([1, 1]) / RatPoly.from_list([0, 0, 1, 1, 1])

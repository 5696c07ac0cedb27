from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polycomplete import GF, NEG_INF, QQ, Poly, RatFunc, poly_gcd, poly_lcm
from polycomplete.field_poly import field_from_descriptor, poly_divrem, ratfunc_make

s = Poly.s(QQ)
one = Poly.one(QQ)


def test_gcd_examples():
    assert poly_gcd(s**2 - 1, s**2 - 2 * s + 1) == s - 1
    assert poly_gcd(Poly.zero(QQ), s**3) == s**3
    assert poly_gcd(s, s + 1) == one


def test_lcm_examples():
    assert poly_lcm(s, s + 1) == s**2 + s
    assert poly_lcm(s**2, s) == s**2
    assert poly_lcm(2 * s, 3 * s) == s


def test_divrem_examples():
    assert poly_divrem(s**2 + 1, s) == (s, one)
    assert poly_divrem(s, s**2) == (Poly.zero(QQ), s)
    assert poly_divrem(s**2 - 1, s - 1) == (s + 1, Poly.zero(QQ))


def test_ratfunc_normalization():
    f = ratfunc_make(2 * s**2, 2 * s)
    assert (f.num, f.den) == (s, one)
    z = ratfunc_make(Poly.zero(QQ), s**3)
    assert z.is_zero() and z.den == one
    u = ratfunc_make(s + 1, s + 1)
    assert (u.num, u.den) == (one, one)


def test_zero_degree_and_valuation():
    assert Poly.zero(QQ).degree == NEG_INF
    with pytest.raises(ValueError):
        Poly.zero(QQ).deg()
    assert (s**3 + s**2).valuation() == 2
    assert RatFunc(one, s**2).degree == -2


def test_gf_arithmetic_wraps():
    F = GF(3)
    t = Poly.s(F)
    assert (t + 2) * (t + 1) == t**2 + 2
    assert (t**3 - t) == t * (t + 1) * (t + 2)
    with pytest.raises(ValueError):
        GF(4)


def test_reverse_and_strings():
    p = Poly([1, 0, 1], QQ)
    assert p.reverse(2) == p
    assert Poly([Fraction(1, 2), 3], QQ).to_strings() == ["1/2", "3"]
    assert Poly.from_strings(["1/2", "3"]) == Poly([Fraction(1, 2), 3])
    assert field_from_descriptor({"GF": 5}) is GF(5)
    assert field_from_descriptor("Q") is QQ


def test_subs_inverse():
    f = RatFunc(one, s + 1).subs_inverse()
    assert (f.num, f.den) == (s, s + 1)


coef = st.integers(-4, 4)
polys = st.lists(coef, max_size=5).map(lambda c: Poly(c, QQ))


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_gcd_lcm_product(a, b):
    if a.is_zero() or b.is_zero():
        return
    assert (poly_gcd(a, b) * poly_lcm(a, b)) == (a * b).monic()


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_divrem_identity(a, b):
    if b.is_zero():
        return
    q, r = poly_divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree

import pytest
from hypothesis import given, settings, strategies as st

from polycomplete import GF, QQ, Poly, PolyMatrix, RatFunc, RatMatrix, companion_form
from polycomplete.oracle import random_instance, random_rational_instance
from polycomplete.polymatrix import scale_to_polynomial
from polycomplete.structure import (
    HomogeneousFactor,
    StructuralData,
    StructureError,
    companion_data,
    companion_data_map,
    complete_structural_data,
    homogeneous_invariant_factors,
    minimal_indices,
    orders_at_infinity,
    partial_multiplicities_at_infinity,
    scale_data,
    smith_form,
    smith_form_by_minors,
    smith_mcmillan,
)

s = Poly.s(QQ)
one, zero = Poly.one(QQ), Poly.zero(QQ)
EX = PolyMatrix([[s, zero]])
DIAG = RatMatrix([[s, zero], [zero, RatFunc(one, s)]])


def test_smith_examples():
    assert smith_form(PolyMatrix.identity(2)) == (one, one)
    assert smith_form(PolyMatrix([[s, zero], [zero, s**2]])) == (s, s**2)
    M = PolyMatrix([[s, zero], [zero, s + 1]])
    assert smith_form(M) == (one, s**2 + s) == smith_form_by_minors(M)


def test_smith_mcmillan_examples():
    assert smith_mcmillan(PolyMatrix([[s, s**2]])) == (RatFunc(s, one),)
    assert smith_mcmillan(DIAG) == (RatFunc(one, s), RatFunc(s, one))
    assert smith_mcmillan(RatMatrix([[RatFunc(one, s)]])) == (RatFunc(one, s),)


def test_orders_at_infinity_examples():
    assert orders_at_infinity(EX) == (-1,)
    assert orders_at_infinity(DIAG) == (-1, 1)
    assert orders_at_infinity(PolyMatrix.identity(3)) == (0, 0, 0)


def test_minimal_indices_examples():
    assert minimal_indices(EX, "right") == (0,)
    assert minimal_indices(PolyMatrix([[s, one], [one, s]]), "right") == ()
    assert minimal_indices(PolyMatrix([[one, s]]), "right") == (1,)


def test_example_data():
    d = complete_structural_data(EX)
    assert (d.rank, d.num, d.den, d.orders, d.cols, d.rows) == (1, (s,), (one,), (-1,), (0,), ())
    z = complete_structural_data(PolyMatrix([[zero]]))
    assert (z.rank, z.num, z.orders, z.cols, z.rows) == (0, (), (), (0,), (0,))


def test_partial_multiplicities():
    v = partial_multiplicities_at_infinity(EX)
    assert (v.degree, v.partial_multiplicities) == (1, (0,))
    v = partial_multiplicities_at_infinity(PolyMatrix([[one, zero], [zero, s]]))
    assert v.partial_multiplicities == (0, 1)


def test_homogeneous_factors():
    F = GF(5)
    t = Poly.s(F)
    I = PolyMatrix([[t, Poly.zero(F)], [Poly.zero(F), t]], F)
    assert homogeneous_invariant_factors(I) == (HomogeneousFactor(t, 0), HomogeneousFactor(t, 0))
    assert homogeneous_invariant_factors(EX) == (HomogeneousFactor(s, 0),)


@pytest.mark.parametrize("seed", range(20))
def test_homogeneous_divisibility_matches_forms(seed):
    # when a | b as pairs, the form of b is the form of a times the form of the quotient pair
    import random
    F = GF(5)
    rng = random.Random(seed)
    t = Poly.s(F)
    base = [t, t + 1, t + 2, Poly.one(F)]
    a = HomogeneousFactor(rng.choice(base), rng.randint(0, 2))
    c = HomogeneousFactor(rng.choice(base), rng.randint(0, 2))
    b = HomogeneousFactor(a.finite_part * c.finite_part, a.infinity_multiplicity + c.infinity_multiplicity)
    assert a.divides(b) and a.divides(None)
    for x in range(5):
        for y in range(5):
            assert b.evaluate(x, y) == a.evaluate(x, y) * c.evaluate(x, y) % 5
    bigger = HomogeneousFactor(b.finite_part, b.infinity_multiplicity + 1)
    assert not bigger.divides(b)


def test_scale_data_examples():
    d = complete_structural_data(DIAG)
    sd = scale_data(d, s)
    assert sd.num == (one, s**2) and sd.orders == (-2, 0)
    P = complete_structural_data(EX)
    assert scale_data(P, one) == P


@pytest.mark.parametrize("seed", range(12))
def test_scale_data_matches_extraction(seed):
    R = random_rational_instance(GF(5), 2, 2, 1, seed)
    psi = R.lcd()
    assert scale_data(complete_structural_data(R), psi) == complete_structural_data(scale_to_polynomial(R, psi))


def test_companion_data_examples():
    P = complete_structural_data(EX)
    assert companion_data_map(P, 1) == P
    C = companion_data_map(P, 2)
    assert (C.m, C.n, C.rank) == (3, 4, 3)
    assert C.num == (one, one, s) and C.orders == (-1, -1, 0)
    assert C.cols == (1,) and C.rows == ()
    assert companion_data(EX, 2) == C


def test_check_rejects_bad_data():
    bad = StructuralData(1, 1, 1, (s,), (one,), (0,), (), (), QQ)
    with pytest.raises(StructureError):
        bad.check()
    bad.check(require_sum=False)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(1, 3))
def test_sum_identity_random(seed, m, n):
    P = random_instance(GF(5), m, n, 2, seed, density=0.7)
    d = complete_structural_data(P)
    assert d.invariant_sum() == 0
    if d.rank:
        assert d.degree == P.degree


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_transpose_data(seed):
    P = random_instance(GF(3), 2, 3, 1, seed, density=0.7)
    assert complete_structural_data(P.transpose()) == complete_structural_data(P).transpose()

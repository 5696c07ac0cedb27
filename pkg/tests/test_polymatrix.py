import pytest

from polycomplete import GF, QQ, Poly, PolyMatrix, RatFunc, RatMatrix, companion_form
from polycomplete.oracle import random_instance
from polycomplete.polymatrix import (
    poly_det,
    rank_over_function_field,
    reversal,
    scale_to_polynomial,
    substitute_inverse,
    transpose,
)
from polycomplete.structure import minimal_indices

s = Poly.s(QQ)
one, zero = Poly.one(QQ), Poly.zero(QQ)


def test_rank_examples():
    I3 = PolyMatrix.identity(3)
    assert rank_over_function_field(I3) == 3
    assert rank_over_function_field(PolyMatrix([[s, zero]])) == 1
    assert rank_over_function_field(PolyMatrix([[s, s**2], [one, s]])) == 1


def test_det():
    assert poly_det(PolyMatrix([[s, one], [one, s]])) == s**2 - 1


def test_scale_to_polynomial():
    R = RatMatrix([[RatFunc(one, s), one]])
    assert scale_to_polynomial(R, s) == PolyMatrix([[one, s]])
    P = PolyMatrix([[s, one]])
    assert scale_to_polynomial(P, one) == P
    D = RatMatrix([[s, zero], [zero, RatFunc(one, s)]])
    assert scale_to_polynomial(D, s) == PolyMatrix([[s**2, zero], [zero, one]])
    with pytest.raises(ValueError):
        scale_to_polynomial(R, s + 1)


def test_reversal():
    assert reversal(PolyMatrix([[s, zero]]), 1) == PolyMatrix([[one, zero]])
    C = PolyMatrix([[Poly.constant(3), one]])
    assert reversal(C, 0) == C
    assert reversal(PolyMatrix([[s**2 + 1]]), 2) == PolyMatrix([[s**2 + 1]])


def test_substitute_inverse():
    assert substitute_inverse(PolyMatrix([[s]])) == RatMatrix([[RatFunc(one, s)]])
    assert substitute_inverse(RatMatrix([[RatFunc(one, s + 1)]])) == RatMatrix([[RatFunc(s, s + 1)]])
    C = RatMatrix([[Poly.constant(2)]])
    assert substitute_inverse(C) == C


def test_companion_shapes():
    P = PolyMatrix([[s, zero]])
    assert companion_form(P, 1).entries == P.entries
    assert companion_form(P, 2).shape == (3, 4)
    with pytest.raises(ValueError):
        companion_form(PolyMatrix([[s**2]]), 1)


def test_transpose():
    P = PolyMatrix([[s, zero]])
    assert transpose(P) == PolyMatrix([[s], [zero]])
    assert transpose(transpose(P)) == P


@pytest.mark.parametrize("seed", range(15))
def test_transpose_swaps_minimal_indices(seed):
    P = random_instance(GF(3), 2, 3, 2, seed, density=0.6)
    assert minimal_indices(P.transpose(), "right") == minimal_indices(P, "left")
    assert minimal_indices(P.transpose(), "left") == minimal_indices(P, "right")

import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from polycomplete.majorization import (
    IntSeq,
    ell_index,
    gen_majorize,
    gen_majorize_detail,
    h_index,
    majorize,
    partitions,
    positive_count,
)


def test_majorize_examples():
    assert majorize((2, 2), (3, 1))
    assert majorize((3, 1, 0), (3, 1, 0))
    assert not majorize((3, 1), (2, 2))
    with pytest.raises(ValueError):
        majorize((1,), (1, 0))


def test_h_index_examples():
    assert h_index((2, 1), (1,), 1) == 1
    assert h_index((0, 0), (0,), 1) == 2
    assert h_index((5, 3), (), 1) == 1
    with pytest.raises(ValueError):
        h_index((2, 1), (1,), 2)


def test_gen_majorize_examples():
    assert gen_majorize((2, 1), (1,), (2,))
    assert gen_majorize((3, 1), (3, 1), ())
    assert not gen_majorize((3, 1), (2, 2), ())
    names = [n for n, *_ in gen_majorize_detail((2, 1), (1,), (2,))]
    assert names == ["gmaj1", "gmaj2[1]", "gmaj3"]


def test_ell_index():
    assert ell_index((2, 1), (1, 2)) == 1
    assert ell_index((1, 1), (2, 0)) == 3


def test_intseq_accessors():
    a = IntSeq([3, 1])
    assert a.at(0) == math.inf and a.at(3) == -math.inf and a.at(2) == 1
    assert a.prefix(0) == 0 and a.prefix(2) == 4
    with pytest.raises(ValueError):
        IntSeq([1, 3])
    assert positive_count((3, 1, 0, 0)) == 2


def test_partitions():
    assert list(partitions(3, 2)) == [(3, 0), (2, 1)]
    assert list(partitions(0, 0)) == [()]
    assert list(partitions(1, 0)) == []
    assert len(list(partitions(6, 3))) == 7


def seq(n):
    return st.lists(st.integers(0, 4), min_size=n, max_size=n).map(lambda v: tuple(sorted(v, reverse=True)))


@st.composite
def shaped(draw, count):
    n = draw(st.integers(0, 4))
    return tuple(draw(seq(n)) for _ in range(count))


@st.composite
def triple(draw):
    q = draw(st.integers(0, 5))
    x = draw(st.integers(0, q))
    return draw(seq(q)), draw(seq(q - x)), draw(seq(x))


@settings(max_examples=300, deadline=None)
@given(shaped(2))
def test_x_zero_is_equality(cd):
    c, d = cd
    assert gen_majorize(c, d, ()) == (c == d)


@settings(max_examples=300, deadline=None)
@given(shaped(2))
def test_empty_d_is_classical(ca):
    c, a = ca
    assert gen_majorize(c, (), a) == majorize(c, a)


@settings(max_examples=300, deadline=None)
@given(triple())
def test_gmaj_implies_sum(cda):
    c, d, a = cda
    if gen_majorize(c, d, a):
        assert sum(c) == sum(d) + sum(a)


@settings(max_examples=200, deadline=None)
@given(shaped(3))
def test_majorize_transitive(abc):
    a, b, c = abc
    if majorize(a, b) and majorize(b, c):
        assert majorize(a, c)


def test_h_minus_j_bounded():
    # h_j - j <= len(d) always, so the d prefix in gmaj2 is well defined
    for q in range(1, 5):
        for x in range(1, q + 1):
            for c in itertools.product(range(3), repeat=q):
                c = tuple(sorted(c, reverse=True))
                for d in itertools.product(range(3), repeat=q - x):
                    d = tuple(sorted(d, reverse=True))
                    for j in range(1, x + 1):
                        assert h_index(c, d, j) - j <= q - x

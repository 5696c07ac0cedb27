import pytest

from polycomplete import GF, QQ, Poly, PolyMatrix, RatFunc, RatMatrix

F2 = GF(2)
F5 = GF(5)


def poly(*coeffs, field=QQ):
    return Poly(list(coeffs), field)


def S(field=QQ):
    return Poly.s(field)


def pm(rows, field=QQ, cols=None):
    """Matrix from nested lists of coefficient lists / Poly values."""
    return PolyMatrix([[e if isinstance(e, Poly) else Poly(e, field) for e in r] for r in rows], field, cols=cols)


def rm(rows, field=QQ):
    return RatMatrix(rows, field)


@pytest.fixture
def s():
    return Poly.s(QQ)


@pytest.fixture
def example_source():
    """The 1x2 matrix [s, 0] over QQ."""
    return PolyMatrix([[Poly.s(QQ), Poly.zero(QQ)]], QQ)

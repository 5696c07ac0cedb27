"""Row completion of matrix pencils through homogeneous invariant factors."""
from __future__ import annotations

from ..field_poly import Poly
from ..majorization import gen_majorize_detail, positive_count
from ..structure import HomogeneousFactor, StructuralData
from .prescribed import Condition, PrescribedDataError, Verdict, make_verdict
from .sequences import difference


def homogeneous_chain(data: StructuralData) -> tuple[HomogeneousFactor, ...]:
    """Pairs ``(alpha_i, p_i + 1)``: the homogeneous invariant factors of a pencil."""
    return tuple(HomogeneousFactor(a, p + 1) for a, p in zip(data.num, data.orders))


class _HomChain:
    """1-based access: ``1`` before the start, the zero polynomial (``None``) after the end."""

    def __init__(self, items, field):
        self.items = tuple(items)
        self.one = HomogeneousFactor(Poly.one(field), 0)

    def __call__(self, i):
        if i < 1:
            return self.one
        if i > len(self.items):
            return None
        return self.items[i - 1]


def _check_pencil(data: StructuralData, what: str) -> None:
    if not data.is_polynomial():
        raise PrescribedDataError(f"{what} data are not polynomial")
    if data.orders and data.orders[0] < -1:
        raise PrescribedDataError(f"{what} data have degree {-data.orders[0]} > 1")


def pencil_row_completion(source: StructuralData, target: StructuralData, x: int, y: int) -> Verdict:
    """Whether some pencil ``A`` gives ``[C; A]`` strictly equivalent to a pencil with ``target`` data.

    ``source`` holds the data of ``C`` (rank ``rb``); ``target`` those of an
    ``(m+x+y) x n`` pencil of rank ``rb + x``.
    """
    _check_pencil(source, "source")
    _check_pencil(target, "target")
    if x < 0 or y < 0:
        raise PrescribedDataError("x and y must be non-negative")
    rb = source.rank
    if target.rank != rb + x or target.m != source.m + x + y or target.n != source.n:
        raise PrescribedDataError("target dimensions or rank do not match x and y")
    field = source.field or target.field
    phi = _HomChain(homogeneous_chain(source), field)
    gam = _HomChain(homogeneous_chain(target), field)
    cb, ub, db, vb = source.cols, source.rows, target.cols, target.rows

    bad = next(
        (i for i in range(1, rb + 1) if not (gam(i).divides(phi(i)) and phi(i).divides(gam(i + x + y)))), None
    )
    conds = [Condition("hom-interlacing", "gamma_i | phi_i | gamma_(i+x+y)", bad is None,
                       None if bad is None else f"i={bad}", None)]
    total = target.invariant_sum()
    conds.append(Condition("target-realizable", "target data satisfy the sum identity (they belong to some pencil)",
                           total == 0, total, 0))
    conds.append(Condition("theta", "positive target row indices >= positive source row indices",
                           positive_count(vb) >= positive_count(ub), positive_count(vb), positive_count(ub)))

    gap = sum(vb) - sum(ub) + sum(gam(i).degree for i in range(1, rb + x + 1))

    def lcm_sum(shift, upto):
        return sum(phi(i + shift).lcm(gam(i)).degree for i in range(1, upto + 1))

    a = difference([gap - lcm_sum(j - x, rb + x - j) - j for j in range(1, x + 1)])
    b = difference([gap - lcm_sum(-x - j, rb + x) for j in range(1, y + 1)])
    for name, ok, lhs, rhs in gen_majorize_detail(cb, db, a):
        conds.append(Condition(f"col-majorization.{name}", "c <' (d, a)", ok, lhs, rhs))
    for name, ok, lhs, rhs in gen_majorize_detail(vb, ub, b):
        conds.append(Condition(f"row-majorization.{name}", "v <' (u, b)", ok, lhs, rhs))
    lhs = lcm_sum(-x, rb + x)
    rhs = gap
    conds.append(Condition("degree-sum", "sum deg lcm(phi_(i-x), gamma_i) <= sum v - sum u + sum deg gamma_i",
                           lhs <= rhs, lhs, rhs))
    return make_verdict("pencil", "polynomial", conds, {"a": a, "b": b})

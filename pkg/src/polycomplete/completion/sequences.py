"""The a/b sequence builders, evaluated exactly as prefix sums and then differenced.

Two parallel forms are kept: :class:`PolyTerms` works with invariant
factors and orders of polynomial matrices (lcm degrees plus ``max`` of
orders), :class:`RatTerms` with the Delta helpers on invariant rational
functions.  For polynomial data the two agree term by term.
"""
from __future__ import annotations

from ..field_poly import Poly
from ..structure import StructuralData
from .algebra import delta, gcd_degree, lcm_degree, numerators, denominators, orders_ladder
from .prescribed import PrescribedData, PrescribedDataError, SeqBuilderOutput

VARIANTS = ("row-side", "column-side", "degree-fixed", "fin-inf-only")


def difference(prefix) -> tuple:
    out, prev = [], 0
    for s in prefix:
        out.append(s - prev)
        prev = s
    return tuple(out)


class RatTerms:
    """Source/target data in Delta form: ``eta/phi, p`` against ``eps/psi, q``."""

    def __init__(self, source: StructuralData, target: PrescribedData):
        self.source, self.target = source, target
        field = source.field
        if field is None and target.num:
            field = target.num[0].field
        if field is None:
            from ..field_poly import QQ
            field = QQ
        self.field = field
        self.r, self.x, self.z = source.rank, target.x, target.z
        self.eta, self.phi = source.num, source.den
        self.p = source.orders
        self.c, self.u = source.cols, source.rows
        self.E = numerators(target.num or (), field)
        self.Psi = denominators(target.den or (), field)
        self.Q = orders_ladder(target.orders or ())
        self.d, self.v = target.cols, target.rows

    # the four Delta forms on indices (source i, target k)
    def d4(self, i: int, k: int) -> int:
        return (
            lcm_degree(self.eta[i - 1], self.E(k))
            - gcd_degree(self.phi[i - 1], self.Psi(k))
            + max(self.p[i - 1], self.Q(k))
        )

    def d2(self, i: int, k: int) -> int:
        return lcm_degree(self.eta[i - 1], self.E(k)) - gcd_degree(self.phi[i - 1], self.Psi(k))

    def t2(self, k: int) -> int:
        return self.E(k).deg() - self.Psi(k).deg() + self.Q(k)

    def t1(self, k: int) -> int:
        return self.E(k).deg() - self.Psi(k).deg()

    def s2(self, i: int) -> int:
        return delta((self.eta[i - 1], self.phi[i - 1]), self.p[i - 1])

    def s1(self, i: int) -> int:
        return delta((self.eta[i - 1], self.phi[i - 1]))

    def row_gap(self) -> int:
        return sum(self.v) - sum(self.u)

    # row side, defined from v and u
    def row_a_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        return (
            self.row_gap()
            + sum(self.t2(i + x - j) for i in range(1, r + j + 1))
            - sum(self.d4(i, i + x - j) for i in range(1, r + 1))
        )

    def row_b_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        return self.row_gap() + sum(self.t2(i + x + j) - self.d4(i, i + x + j) for i in range(1, r - j + 1))

    def row_degree_sides(self) -> tuple[int, int]:
        r, x = self.r, self.x
        lhs = sum(self.d4(i, i + x) for i in range(1, r + 1)) - sum(self.t2(i + x) for i in range(1, r + 1))
        return lhs, self.row_gap()

    # column side, defined from c and d
    def col_gap(self) -> int:
        return sum(self.c) - sum(self.d) + sum(self.s2(i) for i in range(1, self.r + 1))

    def col_a_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        return (
            self.col_gap()
            - sum(self.t2(i) for i in range(1, x - j + 1))
            - sum(self.d4(i, i + x - j) for i in range(1, r + 1))
        )

    def col_b_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        return (
            self.col_gap()
            - sum(self.t2(i) for i in range(1, x + j + 1))
            - sum(self.d4(i, i + x + j) for i in range(1, r - j + 1))
        )

    def col_degree_sides(self) -> tuple[int, int]:
        r, x = self.r, self.x
        lhs = sum(self.d4(i, i + x) for i in range(1, r + 1))
        rhs = self.col_gap() - sum(self.t2(i) for i in range(1, x + 1))
        return lhs, rhs

    # finite + infinite only
    def fi_a_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        return sum(self.t2(i + x - j) for i in range(1, r + j + 1)) - sum(
            self.d4(i, i + x - j) for i in range(1, r + 1)
        )


class PolyTerms:
    """Polynomial form: invariant factors ``alpha, beta`` and orders ``p, q``."""

    def __init__(self, source: StructuralData, target: PrescribedData):
        field = source.field or (target.num[0].field if target.num else None)
        if field is None:
            from ..field_poly import QQ
            field = QQ
        if not source.is_polynomial() or not target.is_polynomial():
            raise PrescribedDataError("polynomial form needs trivial denominators")
        self.field = field
        self.r, self.x, self.z = source.rank, target.x, target.z
        self.alpha, self.p = source.num, source.orders
        self.c, self.u = source.cols, source.rows
        self.B = numerators(target.num or (), field)
        self.Q = orders_ladder(target.orders or ())
        self.d, self.v = target.cols, target.rows

    def lcm_deg(self, i: int, k: int) -> int:
        return lcm_degree(self.alpha[i - 1], self.B(k))

    def gap(self) -> int:
        return sum(self.v) - sum(self.u)

    def a_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        return (
            self.gap()
            + sum(self.B(i + x - j).deg() for i in range(1, r + j + 1))
            + sum(self.Q(i + x - j) for i in range(1, r + j + 1))
            - sum(self.lcm_deg(i, i + x - j) for i in range(1, r + 1))
            - sum(max(self.p[i - 1], self.Q(i + x - j)) for i in range(1, r + 1))
        )

    def b_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        rng = range(1, r - j + 1)
        return (
            self.gap()
            + sum(self.B(i + x + j).deg() for i in rng)
            + sum(self.Q(i + x + j) for i in rng)
            - sum(self.lcm_deg(i, i + x + j) for i in rng)
            - sum(max(self.p[i - 1], self.Q(i + x + j)) for i in rng)
        )

    def degree_sides(self) -> tuple[int, int]:
        r, x = self.r, self.x
        rng = range(1, r + 1)
        lhs = sum(self.lcm_deg(i, i + x) for i in rng) + sum(max(self.p[i - 1], self.Q(i + x)) for i in rng)
        rhs = self.gap() + sum(self.B(i + x).deg() for i in rng) + sum(self.Q(i + x) for i in rng)
        return lhs, rhs

    # the reformulation with e_i = p_i - p_1, f_i = q_i - q_1
    def _shifted(self):
        if self.r == 0:
            raise PrescribedDataError("degree-fixed form needs a nonzero source")
        p1, q1 = self.p[0], self.Q(1)
        e = [p - p1 for p in self.p]
        return p1, q1, e

    def fixed_a_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        p1, q1, e = self._shifted()
        f = lambda k: self.Q(k) - q1
        return (
            self.gap()
            + sum(self.B(i + x - j).deg() for i in range(1, r + j + 1))
            + sum(f(i + x - j) for i in range(1, r + j + 1))
            - sum(self.lcm_deg(i, i + x - j) for i in range(1, r + 1))
            - sum(max(e[i - 1] + p1 - q1, f(i + x - j)) for i in range(1, r + 1))
            + j * q1
        )

    def fixed_b_prefix(self, j: int) -> int:
        r, x = self.r, self.x
        p1, q1, e = self._shifted()
        f = lambda k: self.Q(k) - q1
        rng = range(1, r - j + 1)
        return (
            self.gap()
            + sum(self.B(i + x + j).deg() for i in rng)
            + sum(f(i + x + j) for i in rng)
            - sum(self.lcm_deg(i, i + x + j) for i in rng)
            - sum(max(e[i - 1] + p1 - q1, f(i + x + j)) for i in rng)
        )

    def fixed_degree_sides(self) -> tuple[int, int]:
        r, x = self.r, self.x
        p1, q1, e = self._shifted()
        f = lambda k: self.Q(k) - q1
        rng = range(1, r + 1)
        lhs = sum(self.lcm_deg(i, i + x) for i in rng) + sum(max(e[i - 1] + p1 - q1, f(i + x)) for i in rng)
        rhs = self.gap() + sum(self.B(i + x).deg() for i in rng) + sum(f(i + x) for i in rng)
        return lhs, rhs


def _output(a_prefix, b_prefix) -> SeqBuilderOutput:
    a_prefix, b_prefix = tuple(a_prefix), tuple(b_prefix)
    return SeqBuilderOutput(difference(a_prefix), difference(b_prefix), a_prefix, b_prefix)


def build_sequences(source: StructuralData, target: PrescribedData, variant: str = "row-side") -> SeqBuilderOutput:
    """Materialize the ``a`` (length ``x``) and ``b`` (length ``z-x``) sequences.

    ``row-side`` uses the displays built from the row indices ``v, u``;
    ``column-side`` the alternate displays built from ``c, d``;
    ``degree-fixed`` the polynomial reformulation through ``e_i = p_i - p_1``
    and ``f_i = q_i - q_1``; ``fin-inf-only`` the sequence ``a'`` used when
    only the finite and infinite structures are prescribed (``b`` empty).
    """
    x, z = target.x, target.z
    if not 0 <= x <= z:
        raise PrescribedDataError(f"need 0 <= x <= z, got x={x}, z={z}")
    if target.num is None or target.orders is None or len(target.orders) != source.rank + x:
        raise PrescribedDataError("sequence builders need the finite and infinite target structure")
    if variant == "row-side":
        if target.rows is None:
            raise PrescribedDataError("row-side builder needs the target row minimal indices")
        t = RatTerms(source, target)
        return _output(
            (t.row_a_prefix(j) for j in range(1, x + 1)), (t.row_b_prefix(j) for j in range(1, z - x + 1))
        )
    if variant == "column-side":
        if target.cols is None:
            raise PrescribedDataError("column-side builder needs the target column minimal indices")
        t = RatTerms(source, target)
        return _output(
            (t.col_a_prefix(j) for j in range(1, x + 1)), (t.col_b_prefix(j) for j in range(1, z - x + 1))
        )
    if variant == "degree-fixed":
        if target.rows is None:
            raise PrescribedDataError("degree-fixed builder needs the target row minimal indices")
        t = PolyTerms(source, target)
        return _output(
            (t.fixed_a_prefix(j) for j in range(1, x + 1)), (t.fixed_b_prefix(j) for j in range(1, z - x + 1))
        )
    if variant == "fin-inf-only":
        t = RatTerms(source, target)
        return _output((t.fi_a_prefix(j) for j in range(1, x + 1)), ())
    raise ValueError(f"unknown builder variant {variant!r}; expected one of {VARIANTS}")


def polynomial_sequences(source: StructuralData, target: PrescribedData) -> SeqBuilderOutput:
    """Row-side ``a, b`` from the polynomial displays (no Delta helpers involved)."""
    t = PolyTerms(source, target)
    x, z = target.x, target.z
    return _output((t.a_prefix(j) for j in range(1, x + 1)), (t.b_prefix(j) for j in range(1, z - x + 1)))

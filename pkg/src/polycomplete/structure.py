"""Complete structural data of polynomial and rational matrices.

The four invariant families are

* the invariant rational functions ``eta_i / phi_i`` (Smith–McMillan form),
* the invariant orders at infinity ``p_1 <= ... <= p_r``,
* the column (right) minimal indices, stored decreasingly,
* the row (left) minimal indices, stored decreasingly.

Smith forms are computed by unimodular elimination; the determinantal
divisor route (:func:`smith_form_by_minors`) is kept as an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .field_poly import NEG_INF, Poly, RatFunc, poly_gcd
from .polymatrix import (
    PolyMatrix,
    RatMatrix,
    as_poly_matrix,
    companion_form,
    const_rank,
    poly_det,
    reversal,
    scale_to_polynomial,
    substitute_inverse,
)


class StructureError(RuntimeError):
    """Extracted data violates an invariant it must satisfy (an extractor bug)."""


# -- Smith form ----------------------------------------------------------------

def _smith_diagonal(entries: list[list[Poly]], field) -> list[Poly]:
    a = [list(r) for r in entries]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    for k in range(min(m, n)):
        while True:
            piv = None
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    e = a[i][j]
                    if e.coeffs and (best is None or len(e.coeffs) < best):
                        piv, best = (i, j), len(e.coeffs)
                        if best == 1:
                            break
                if best == 1:
                    break
            if piv is None:
                return diag
            i, j = piv
            a[k], a[i] = a[i], a[k]
            if j != k:
                for row in a:
                    row[k], row[j] = row[j], row[k]
            p = a[k][k]
            dirty = False
            for i in range(k + 1, m):
                if a[i][k].coeffs:
                    q, r = divmod(a[i][k], p)
                    rowk, rowi = a[k], a[i]
                    for j in range(k, n):
                        if rowk[j].coeffs:
                            rowi[j] = rowi[j] - q * rowk[j]
                    if r.coeffs:
                        dirty = True
            for j in range(k + 1, n):
                if a[k][j].coeffs:
                    q, r = divmod(a[k][j], p)
                    for i in range(k, m):
                        if a[i][k].coeffs:
                            a[i][j] = a[i][j] - q * a[i][k]
                    if r.coeffs:
                        dirty = True
            if dirty:
                continue
            # pivot row and column are clear; the pivot must divide the rest
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n) if not p.divides(a[i][j])),
                None,
            )
            if bad is None:
                diag.append(p.monic())
                break
            for j in range(k, n):
                a[k][j] = a[k][j] + a[bad][j]
    return diag


def smith_form(P) -> tuple[Poly, ...]:
    """Invariant factors ``a_1 | ... | a_r`` of a polynomial matrix."""
    P = as_poly_matrix(P)
    if P.rows == 0 or P.cols == 0:
        return ()
    return tuple(_smith_diagonal([list(r) for r in P.entries], P.field))


def determinantal_divisors(P) -> tuple[Poly, ...]:
    """``D_k`` = monic gcd of all ``k x k`` minors, for ``k = 1 .. rank``."""
    P = as_poly_matrix(P)
    out = []
    for k in range(1, min(P.rows, P.cols) + 1):
        g = Poly.zero(P.field)
        for rs in combinations(range(P.rows), k):
            for cs in combinations(range(P.cols), k):
                minor = PolyMatrix([[P.entries[i][j] for j in cs] for i in rs], P.field, cols=k)
                g = poly_gcd(g, poly_det(minor))
                if g.is_one():
                    break
            if g.is_one():
                break
        if g.is_zero():
            break
        out.append(g)
    return tuple(out)


def smith_form_by_minors(P) -> tuple[Poly, ...]:
    """Invariant factors as quotients ``D_i / D_{i-1}`` of determinantal divisors."""
    ds = determinantal_divisors(P)
    prev = Poly.one(as_poly_matrix(P).field)
    out = []
    for d in ds:
        out.append(d.exact_div(prev).monic())
        prev = d
    return tuple(out)


# -- Smith–McMillan and infinity -------------------------------------------------

def smith_mcmillan(R) -> tuple[RatFunc, ...]:
    """Invariant rational functions ``eta_i/phi_i`` of a rational matrix."""
    R = R.as_rat()
    lcd = R.lcd()
    return tuple(RatFunc(a, lcd) for a in smith_form(scale_to_polynomial(R, lcd)))


def orders_at_infinity(R) -> tuple[int, ...]:
    """Invariant orders at infinity, read off ``R(1/s)`` as ``s``-adic valuations."""
    out = tuple(f.valuation() for f in smith_mcmillan(substitute_inverse(R)))
    if any(a > b for a, b in zip(out, out[1:])):
        raise StructureError(f"orders at infinity not sorted: {out}")
    return out


# -- minimal indices --------------------------------------------------------------

def _kernel_dimension(P: PolyMatrix, k: int) -> int:
    """Dimension over the field of ``{v : deg v <= k, P v = 0}``."""
    m, n = P.shape
    d = P.degree
    coeffs = [P.coefficient(t) for t in range(d + 1)]
    zero = P.field.zero
    rows = []
    for t in range(d + k + 1):
        for i in range(m):
            row = [zero] * (n * (k + 1))
            for j in range(k + 1):
                if 0 <= t - j <= d:
                    src = coeffs[t - j][i]
                    row[j * n:(j + 1) * n] = src
            rows.append(row)
    return n * (k + 1) - const_rank(rows, P.field)


def _right_minimal_indices(P: PolyMatrix, rank: int) -> tuple[int, ...]:
    count = P.cols - rank
    if count == 0:
        return ()
    if P.is_zero():
        return (0,) * count
    d = P.degree
    found: list[int] = []
    prev_n = 0  # N_{k-1}
    prev_jump = 0  # number of indices <= k-1
    k = 0
    limit = rank * d + 1
    while len(found) < count:
        if k > limit:
            raise StructureError(f"minimal index search exceeded bound {limit}")
        nk = _kernel_dimension(P, k)
        jump = nk - prev_n  # indices <= k
        found.extend([k] * (jump - prev_jump))
        prev_n, prev_jump = nk, jump
        k += 1
    if len(found) != count:
        raise StructureError("minimal index count mismatch")
    return tuple(sorted(found, reverse=True))


def minimal_indices(M, side: str = "right") -> tuple[int, ...]:
    """Column (``side='right'``) or row (``side='left'``) minimal indices, decreasing.

    Computed degree by degree: with ``N_k`` the dimension of the polynomial
    kernel vectors of degree ``<= k``, ``N_k - N_{k-1}`` counts the minimal
    indices ``<= k``.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    if isinstance(M, RatMatrix):
        M = scale_to_polynomial(M, M.lcd())
    if side == "left":
        M = M.transpose()
    from .polymatrix import rank_over_function_field

    return _right_minimal_indices(M, rank_over_function_field(M))


# -- bundles ---------------------------------------------------------------------

@dataclass(frozen=True)
class StructuralData:
    """Invariants of an ``m x n`` matrix of rank ``rank``.

    ``num``/``den`` are the numerator and denominator chains of the invariant
    rational functions, ``orders`` the invariant orders at infinity, ``cols``
    and ``rows`` the column and row minimal indices (non-increasing).
    """

    m: int
    n: int
    rank: int
    num: tuple
    den: tuple
    orders: tuple
    cols: tuple
    rows: tuple
    coeff_field: object = dc_field(default=None, compare=False, repr=False)

    @property
    def field(self):
        if self.coeff_field is not None:
            return self.coeff_field
        return self.num[0].field if self.num else None

    def is_polynomial(self) -> bool:
        return all(d.is_one() for d in self.den)

    @property
    def degree(self):
        """Degree of a polynomial matrix with these data (``-orders[0]``)."""
        return -self.orders[0] if self.orders else NEG_INF

    def invariant_sum(self) -> int:
        """``sum c + sum u + sum p + sum deg(eta) - sum deg(phi)``; zero for any realizable data."""
        return (
            sum(self.cols)
            + sum(self.rows)
            + sum(self.orders)
            + sum(e.deg() for e in self.num)
            - sum(f.deg() for f in self.den)
        )

    def transpose(self) -> "StructuralData":
        return StructuralData(
            self.n, self.m, self.rank, self.num, self.den, self.orders, self.rows, self.cols, self.field
        )

    def fractions(self) -> tuple[RatFunc, ...]:
        return tuple(RatFunc(e, f) for e, f in zip(self.num, self.den))

    def check(self, require_sum: bool = True) -> "StructuralData":
        """Raise :class:`StructureError` unless every invariant holds.

        ``require_sum=False`` checks well-formedness only, leaving out the
        sum identity that realizable data must satisfy.
        """
        r = self.rank
        problems = []
        if not (0 <= r <= min(self.m, self.n)):
            problems.append("rank out of range")
        if len(self.num) != r or len(self.den) != r or len(self.orders) != r:
            problems.append("chain lengths differ from the rank")
        if len(self.cols) != self.n - r or len(self.rows) != self.m - r:
            problems.append("minimal index counts do not match the rank")
        if any(not e.is_monic() for e in self.num) or any(not f.is_monic() for f in self.den):
            problems.append("chains must be monic")
        if any(not a.divides(b) for a, b in zip(self.num, self.num[1:])):
            problems.append("numerators are not a divisibility chain")
        if any(not b.divides(a) for a, b in zip(self.den, self.den[1:])):
            problems.append("denominators are not a divisibility chain")
        if any(not poly_gcd(e, f).is_one() for e, f in zip(self.num, self.den)):
            problems.append("invariant rational functions not reduced")
        if any(a > b for a, b in zip(self.orders, self.orders[1:])):
            problems.append("orders at infinity not non-decreasing")
        for name, seq in (("column", self.cols), ("row", self.rows)):
            if any(a < b for a, b in zip(seq, seq[1:])) or any(v < 0 for v in seq):
                problems.append(f"{name} minimal indices are not a partition")
        if require_sum and not problems and self.invariant_sum() != 0:
            problems.append(f"invariant sum is {self.invariant_sum()}, expected 0")
        if problems:
            raise StructureError("; ".join(problems))
        return self


def complete_structural_data(M) -> StructuralData:
    """Extract and validate all four invariant families of ``M``."""
    R = M.as_rat()
    fracs = smith_mcmillan(R)
    r = len(fracs)
    data = StructuralData(
        m=M.rows,
        n=M.cols,
        rank=r,
        num=tuple(f.num for f in fracs),
        den=tuple(f.den for f in fracs),
        orders=orders_at_infinity(R),
        cols=minimal_indices(R, "right"),
        rows=minimal_indices(R, "left"),
        coeff_field=M.field,
    )
    if len(data.orders) != r:
        raise StructureError("finite and infinite structure disagree on the rank")
    return data.check()


# -- views of the polynomial case -------------------------------------------------

@dataclass(frozen=True)
class InfinityView:
    """Partial multiplicities of infinity ``e_1 <= ... <= e_r`` of a degree-``d`` matrix."""

    degree: int
    partial_multiplicities: tuple

    def at_grade(self, g: int) -> tuple:
        """Multiplicities of ``0`` in the reversal taken with respect to grade ``g``."""
        if g < self.degree:
            raise ValueError("grade below degree")
        return tuple(e + g - self.degree for e in self.partial_multiplicities)


def partial_multiplicities_at_infinity(P: PolyMatrix) -> InfinityView:
    P = as_poly_matrix(P)
    if P.is_zero():
        raise ValueError("partial multiplicities of infinity need a nonzero matrix")
    d = P.degree
    es = tuple(a.valuation() for a in smith_form(reversal(P, d)))
    expected = tuple(p + d for p in orders_at_infinity(P))
    if es != expected:
        raise StructureError(f"partial multiplicities {es} disagree with orders shifted by degree {expected}")
    return InfinityView(d, es)


@dataclass(frozen=True)
class HomogeneousFactor:
    """``t**e * t**deg(a) * a(s/t)``, kept as the pair (finite part ``a``, multiplicity ``e``)."""

    finite_part: Poly
    infinity_multiplicity: int

    @property
    def degree(self) -> int:
        return self.finite_part.deg() + self.infinity_multiplicity

    def divides(self, other: "HomogeneousFactor | None") -> bool:
        if other is None:  # the zero polynomial
            return True
        return (
            self.infinity_multiplicity <= other.infinity_multiplicity
            and self.finite_part.divides(other.finite_part)
        )

    def lcm(self, other: "HomogeneousFactor") -> "HomogeneousFactor":
        from .field_poly import poly_lcm

        return HomogeneousFactor(
            poly_lcm(self.finite_part, other.finite_part),
            max(self.infinity_multiplicity, other.infinity_multiplicity),
        )

    def evaluate(self, s, t):
        """Value of the represented homogeneous polynomial at ``(s, t)``."""
        a = self.finite_part
        d = a.deg()
        acc = sum(c * s**k * t ** (d - k) for k, c in enumerate(a.coeffs))
        return a.field.norm(acc * t**self.infinity_multiplicity)


def homogeneous_invariant_factors(P: PolyMatrix) -> tuple[HomogeneousFactor, ...]:
    P = as_poly_matrix(P)
    view = partial_multiplicities_at_infinity(P)
    return tuple(HomogeneousFactor(a, e) for a, e in zip(smith_form(P), view.partial_multiplicities))


# -- data-level correspondences ---------------------------------------------------

def scale_data(data: StructuralData, psi: Poly) -> StructuralData:
    """Data of ``psi * R`` from the data of ``R`` (``psi`` a monic multiple of ``phi_1``)."""
    if not psi.is_monic():
        raise ValueError("scaling polynomial must be monic")
    if data.den and not data.den[0].divides(psi):
        raise ValueError(f"{psi} is not a multiple of the first denominator {data.den[0]}")
    one = Poly.one(psi.field)
    k = psi.deg()
    return StructuralData(
        data.m,
        data.n,
        data.rank,
        tuple((psi * e).exact_div(f) for e, f in zip(data.num, data.den)),
        (one,) * data.rank,
        tuple(p - k for p in data.orders),
        data.cols,
        data.rows,
        psi.field,
    )


def scale_by_denominator(data: StructuralData, psi: Poly | None = None) -> StructuralData:
    """:func:`scale_data` with ``psi`` defaulting to the first denominator ``phi_1``."""
    if psi is None:
        if not data.den:
            raise ValueError("rank-0 data has no denominator; pass psi")
        psi = data.den[0]
    return scale_data(data, psi)


def companion_data_map(data: StructuralData, g: int) -> StructuralData:
    """Data of the grade-``g`` companion pencil from the data of a polynomial matrix."""
    if not data.is_polynomial():
        raise ValueError("companion map needs polynomial data")
    if g < 1 or (data.orders and g < -data.orders[0]):
        raise ValueError(f"invalid grade {g}")
    field = data.field
    one = Poly.one(field) if field is not None else None
    extra = (g - 1) * data.n
    if extra and one is None:
        raise ValueError("field unknown for rank-0 data; pass data with a field")
    return StructuralData(
        data.m + extra,
        g * data.n,
        data.rank + extra,
        (one,) * extra + data.num,
        (one,) * (extra + data.rank),
        (-1,) * extra + tuple(g - 1 + p for p in data.orders),
        tuple(c + g - 1 for c in data.cols),
        data.rows,
        field,
    )


def companion_data(P: PolyMatrix, g: int) -> StructuralData:
    """Extracted data of ``companion_form(P, g)``."""
    return complete_structural_data(companion_form(P, g))

"""Dense polynomial and rational matrices and the whole-matrix transformations.

Matrices are immutable tuples of rows.  ``PolyMatrix`` holds :class:`Poly`
entries, ``RatMatrix`` holds :class:`RatFunc` entries.  Grades are always
passed explicitly (``reversal``, ``companion_form``).
"""
from __future__ import annotations

from typing import Sequence

from .field_poly import NEG_INF, QQ, Poly, RatFunc, poly_lcm


class _Matrix:
    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, entries, field, cols=None):
        entries = tuple(tuple(row) for row in entries)
        if cols is None:
            if not entries:
                raise ValueError("need cols for a matrix without rows")
            cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        self.field = field
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries
        self._hash = None

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.field is other.field
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.cols, self.entries))
        return self._hash

    def __getstate__(self):
        return (self.field, self.cols, self.entries)

    def __setstate__(self, state):
        self.field, self.cols, self.entries = state
        self.rows = len(self.entries)
        self._hash = None

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)

    def __repr__(self):
        return f"{type(self).__name__}({self.rows}x{self.cols} over {self.field!r})"

    def transpose(self):
        cols = [tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)]
        return type(self)(cols, self.field, cols=self.rows)

    def vstack(self, other):
        if other.cols != self.cols:
            raise ValueError(f"cannot stack {self.shape} on {other.shape}")
        if isinstance(self, PolyMatrix) and isinstance(other, PolyMatrix):
            return PolyMatrix(self.entries + other.entries, self.field, cols=self.cols)
        return RatMatrix(self.as_rat().entries + other.as_rat().entries, self.field, cols=self.cols)


class PolyMatrix(_Matrix):
    """``m x n`` matrix over ``field[s]``."""

    __slots__ = ()

    def __init__(self, entries, field=None, cols=None):
        rows = [list(r) for r in entries]
        if field is None:
            field = next((e.field for r in rows for e in r if isinstance(e, Poly)), QQ)
        rows = [[_as_poly(e, field) for e in r] for r in rows]
        super().__init__(rows, field, cols)

    @classmethod
    def from_coeffs(cls, rows: Sequence, field=QQ) -> "PolyMatrix":
        """Entries given as low-degree-first coefficient lists."""
        return cls([[Poly(c, field) for c in row] for row in rows], field)

    @classmethod
    def zeros(cls, m: int, n: int, field=QQ) -> "PolyMatrix":
        z = Poly.zero(field)
        return cls([[z] * n for _ in range(m)], field, cols=n)

    @classmethod
    def identity(cls, n: int, field=QQ) -> "PolyMatrix":
        one, z = Poly.one(field), Poly.zero(field)
        return cls([[one if i == j else z for j in range(n)] for i in range(n)], field, cols=n)

    @classmethod
    def from_coefficient_matrices(cls, mats: Sequence, field=QQ, shape=None) -> "PolyMatrix":
        """Build ``sum_k mats[k] * s**k`` from constant matrices."""
        if shape is None:
            shape = (len(mats[0]), len(mats[0][0]) if mats[0] else 0)
        m, n = shape
        return cls(
            [[Poly([mats[k][i][j] for k in range(len(mats))], field) for j in range(n)] for i in range(m)],
            field,
            cols=n,
        )

    @property
    def degree(self):
        return max((e.degree for row in self.entries for e in row), default=NEG_INF)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def coefficient(self, k: int) -> list[list]:
        """Constant matrix multiplying ``s**k``."""
        return [[e.coeff(k) for e in row] for row in self.entries]

    def evaluate(self, a) -> list[list]:
        return [[e(a) for e in row] for row in self.entries]

    def as_rat(self) -> "RatMatrix":
        return RatMatrix([[RatFunc.from_poly(e) for e in row] for row in self.entries], self.field, cols=self.cols)

    def scaled(self, p: Poly) -> "PolyMatrix":
        return PolyMatrix([[e * p for e in row] for row in self.entries], self.field, cols=self.cols)

    def is_pencil(self) -> bool:
        return self.degree <= 1


class Pencil(PolyMatrix):
    """Polynomial matrix of degree at most one, read as ``s*X + Y``."""

    __slots__ = ()

    def __init__(self, entries, field=None, cols=None):
        super().__init__(entries, field, cols)
        if self.degree > 1:
            raise ValueError(f"pencil entries must have degree <= 1, got {self.degree}")

    @property
    def X(self):
        return self.coefficient(1)

    @property
    def Y(self):
        return self.coefficient(0)


class RatMatrix(_Matrix):
    """``m x n`` matrix over ``field(s)``."""

    __slots__ = ()

    def __init__(self, entries, field=None, cols=None):
        rows = [list(r) for r in entries]
        if field is None:
            field = next((e.field for r in rows for e in r if isinstance(e, (Poly, RatFunc))), QQ)
        rows = [[_as_rat(e, field) for e in r] for r in rows]
        super().__init__(rows, field, cols)

    @classmethod
    def from_fractions(cls, rows: Sequence, field=QQ) -> "RatMatrix":
        """Entries given as ``(num_coeffs, den_coeffs)`` pairs."""
        return cls([[RatFunc(Poly(n, field), Poly(d, field)) for n, d in row] for row in rows], field)

    def as_rat(self) -> "RatMatrix":
        return self

    def lcd(self) -> Poly:
        """Monic least common denominator of the entries."""
        out = Poly.one(self.field)
        for row in self.entries:
            for e in row:
                out = poly_lcm(out, e.den)
        return out

    def is_polynomial(self) -> bool:
        return all(e.is_polynomial() for row in self.entries for e in row)

    def to_poly(self) -> PolyMatrix:
        if not self.is_polynomial():
            raise ValueError("matrix has non-polynomial entries")
        return PolyMatrix([[e.num for e in row] for row in self.entries], self.field, cols=self.cols)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)


def _as_poly(e, field) -> Poly:
    if isinstance(e, Poly):
        if e.field is not field:
            raise TypeError("mixed fields in matrix")
        return e
    if isinstance(e, RatFunc):
        if not e.is_polynomial():
            raise ValueError(f"entry {e} is not polynomial")
        return e.num
    if isinstance(e, (list, tuple)):
        return Poly(e, field)
    return Poly((e,), field)


def _as_rat(e, field) -> RatFunc:
    if isinstance(e, RatFunc):
        return e
    return RatFunc.from_poly(_as_poly(e, field))


def as_poly_matrix(M) -> PolyMatrix:
    if isinstance(M, PolyMatrix):
        return M
    return M.to_poly()


# -- constant-matrix linear algebra ------------------------------------------

def const_rank(rows: list[list], field) -> int:
    """Rank of a constant matrix over ``field`` by Gaussian elimination."""
    a = [list(r) for r in rows if any(c != 0 for c in r)]
    if not a:
        return 0
    norm, inv = field.norm, field.inv
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        pinv = inv(prow[col])
        for i in range(rank + 1, len(a)):
            f = a[i][col]
            if f != 0:
                f = norm(f * pinv)
                row = a[i]
                for j in range(col, ncols):
                    if prow[j] != 0:
                        row[j] = norm(row[j] - f * prow[j])
        rank += 1
        if rank == len(a):
            break
    return rank


def _clear_row_denominators(M) -> list[list[Poly]]:
    if isinstance(M, PolyMatrix):
        return [list(row) for row in M.entries]
    out = []
    for row in M.entries:
        d = Poly.one(M.field)
        for e in row:
            d = poly_lcm(d, e.den)
        out.append([e.num * d.exact_div(e.den) for e in row])
    return out


def _bareiss(a: list[list[Poly]], field):
    """Fraction-free elimination in place; returns (rank, sign, last pivot)."""
    m = len(a)
    n = len(a[0]) if m else 0
    prev = Poly.one(field)
    sign = 1
    rank = 0
    for col in range(n):
        if rank == m:
            break
        piv = None
        best = None
        for i in range(rank, m):
            e = a[i][col]
            if e.coeffs and (best is None or e.degree < best):
                piv, best = i, e.degree
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
            sign = -sign
        p = a[rank][col]
        for i in range(rank + 1, m):
            ai = a[i]
            f = ai[col]
            for j in range(col + 1, n):
                ai[j] = (p * ai[j] - f * a[rank][j]).exact_div(prev)
            ai[col] = Poly.zero(field)
        prev = p
        rank += 1
    return rank, sign, prev


def rank_over_function_field(M) -> int:
    """Rank of a polynomial or rational matrix over ``field(s)``."""
    if M.rows == 0 or M.cols == 0:
        return 0
    a = _clear_row_denominators(M)
    rank, _, _ = _bareiss(a, M.field)
    return rank


def poly_det(M) -> Poly:
    """Determinant of a square polynomial matrix (fraction-free elimination)."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if M.rows == 0:
        return Poly.one(M.field)
    a = [list(row) for row in as_poly_matrix(M).entries]
    rank, sign, last = _bareiss(a, M.field)
    if rank < M.rows:
        return Poly.zero(M.field)
    return last if sign > 0 else -last


def rank_by_evaluation(P: PolyMatrix, points) -> int:
    """Max rank of ``P(a)`` over the given points (a lower bound for the true rank)."""
    return max((const_rank(P.evaluate(a), P.field) for a in points), default=0)


# -- whole-matrix transformations --------------------------------------------

def scale_to_polynomial(R, psi: Poly) -> PolyMatrix:
    """Entrywise ``psi * R`` for a monic multiple ``psi`` of the lcd of ``R``."""
    R = R.as_rat()
    if not psi.is_monic():
        raise ValueError("scaling polynomial must be monic")
    lcd = R.lcd()
    if not lcd.divides(psi):
        raise ValueError(f"{psi} is not a multiple of the least common denominator {lcd}")
    return PolyMatrix(
        [[(e.num * psi).exact_div(e.den) for e in row] for row in R.entries], R.field, cols=R.cols
    )


def reversal(P: PolyMatrix, d: int) -> PolyMatrix:
    """``t**d * P(1/t)`` with respect to grade ``d >= deg P``."""
    if P.degree > d:
        raise ValueError(f"grade {d} is below the degree {P.degree}")
    if d < 0:
        raise ValueError("grade must be non-negative")
    return PolyMatrix([[e.reverse(d) for e in row] for row in P.entries], P.field, cols=P.cols)


def substitute_inverse(R) -> RatMatrix:
    """Entrywise substitution ``s -> 1/s``."""
    R = R.as_rat()
    return RatMatrix([[e.subs_inverse() for e in row] for row in R.entries], R.field, cols=R.cols)


def companion_form(P: PolyMatrix, g: int) -> Pencil:
    """First Frobenius companion form of ``P`` with respect to grade ``g``.

    The result is the ``(m + (g-1) n) x g n`` pencil ``s X + Y`` with
    ``X = diag(P_g, I, ..., I)`` and ``Y`` carrying ``P_{g-1} ... P_0`` in the
    first block row and ``-I`` blocks on the block subdiagonal.
    """
    if g < 1:
        raise ValueError("grade must be at least 1")
    if P.degree > g:
        raise ValueError(f"grade {g} is below the degree {P.degree}")
    field = P.field
    m, n = P.shape
    rows_total, cols_total = m + (g - 1) * n, g * n
    zero = Poly.zero(field)
    s = Poly.s(field)
    minus_one = Poly.constant(-1, field)
    out = [[zero] * cols_total for _ in range(rows_total)]
    for i in range(m):
        for j in range(n):
            e = P.entries[i][j]
            out[i][j] = Poly.constant(e.coeff(g), field) * s + e.coeff(g - 1)
            for k in range(1, g):
                out[i][k * n + j] = Poly.constant(e.coeff(g - 1 - k), field)
    for b in range(1, g):
        for t in range(n):
            r = m + (b - 1) * n + t
            out[r][b * n + t] = s
            out[r][(b - 1) * n + t] = minus_one
    return Pencil(out, field, cols=cols_total)


def transpose(M):
    return M.transpose()

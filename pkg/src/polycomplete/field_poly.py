"""Exact field scalars, univariate polynomials and reduced rational functions.

Two coefficient fields are supported: the rationals (``QQ``, backed by
:class:`fractions.Fraction`) and prime fields ``GF(p)`` for ``p < 2**16``
(residues stored as plain ints in ``[0, p)``).

Polynomials are immutable and store their coefficients low degree first.
The zero polynomial has degree ``NEG_INF``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

NEG_INF = -math.inf
POS_INF = math.inf


class Rationals:
    """The field of rational numbers."""

    name = "Q"
    characteristic = 0
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (Rationals, ())

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return Fraction(value.strip())
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not exact")
        return Fraction(value)

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def norm(a):
        return a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def format(self, a) -> str:
        return str(a)

    def elements(self):
        raise ValueError("QQ is infinite")

    def descriptor(self):
        return "Q"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


class GF:
    """Prime field of residues modulo ``p``."""

    _cache: dict = {}

    def __new__(cls, p: int):
        p = int(p)
        field = cls._cache.get(p)
        if field is None:
            if not (_is_prime(p) and p < 2**16):
                raise ValueError(f"GF(p) needs a prime p < 2**16, got {p}")
            field = super().__new__(cls)
            field.p = p
            field.characteristic = p
            field.name = f"GF({p})"
            field.zero = 0
            field.one = 1
            cls._cache[p] = field
        return field

    def __reduce__(self):
        return (GF, (self.p,))

    def __repr__(self):
        return f"GF({self.p})"

    def __call__(self, value) -> int:
        if isinstance(value, str):
            value = int(value.strip())
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not exact")
        return int(value) % self.p

    def norm(self, a):
        return a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def format(self, a) -> str:
        return str(a)

    def elements(self):
        return range(self.p)

    def descriptor(self):
        return {"GF": self.p}


QQ = Rationals()


def field_from_descriptor(desc):
    """Inverse of ``field.descriptor()``: ``"Q"`` or ``{"GF": p}``."""
    if desc in ("Q", "QQ"):
        return QQ
    if isinstance(desc, dict) and set(desc) == {"GF"}:
        return GF(int(desc["GF"]))
    if isinstance(desc, str) and desc.upper().startswith("GF"):
        return GF(int(desc.strip("GFgf()")))
    raise ValueError(f"unknown field descriptor {desc!r}")


class Poly:
    """Univariate polynomial with coefficients in ``field``, low degree first."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable = (), field=QQ):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, field, coeffs):
        # coeffs already normalized and trimmed
        p = object.__new__(cls)
        p.field = field
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def _trim(cls, field, cs: list):
        while cs and cs[-1] == 0:
            cs.pop()
        return cls._raw(field, tuple(cs))

    @classmethod
    def zero(cls, field=QQ) -> "Poly":
        return cls._raw(field, ())

    @classmethod
    def one(cls, field=QQ) -> "Poly":
        return cls._raw(field, (field.one,))

    @classmethod
    def constant(cls, c, field=QQ) -> "Poly":
        return cls((c,), field)

    @classmethod
    def monomial(cls, k: int, field=QQ, c=1) -> "Poly":
        return cls([0] * k + [c], field)

    @classmethod
    def s(cls, field=QQ) -> "Poly":
        return cls.monomial(1, field)

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def deg(self) -> int:
        """Degree as an int; the zero polynomial is rejected."""
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def valuation(self):
        """Multiplicity of ``s`` as a factor (``POS_INF`` for zero)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return POS_INF

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise TypeError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,), self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        norm = self.field.norm
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] = norm(cs[k] + c)
        return Poly._trim(self.field, cs)

    __radd__ = __add__

    def __neg__(self):
        norm = self.field.norm
        return Poly._raw(self.field, tuple(norm(-c) for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(self.field, ())
        norm = self.field.norm
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._trim(self.field, [norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = self.field(c)
        norm = self.field.norm
        return Poly._trim(self.field, [norm(x * c) for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by ``s**k`` (``k >= 0``)."""
        if not self.coeffs or k == 0:
            return self
        return Poly._raw(self.field, (self.field.zero,) * k + self.coeffs)

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return poly_divrem(self, self._coerce(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, self._coerce(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = poly_divrem(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        """True when ``self | other``; everything divides zero."""
        if not other.coeffs:
            return True
        if not self.coeffs:
            return False
        return not poly_divrem(other, self)[1]

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __call__(self, x):
        x = self.field(x)
        norm = self.field.norm
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = norm(acc * x + c)
        return acc

    def reverse(self, n: int | None = None) -> "Poly":
        """Return ``s**n * p(1/s)``; ``n`` defaults to the degree."""
        if not self.coeffs:
            return self
        if n is None:
            n = len(self.coeffs) - 1
        if n < len(self.coeffs) - 1:
            raise ValueError(f"reversal grade {n} below degree {self.degree}")
        padded = self.coeffs + (self.field.zero,) * (n + 1 - len(self.coeffs))
        return Poly._trim(self.field, list(reversed(padded)))

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,), self.field).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.name, self.coeffs))
        return self._hash

    def __getstate__(self):
        return (self.field, self.coeffs)

    def __setstate__(self, state):
        self.field, self.coeffs = state
        self._hash = None

    def __repr__(self):
        return f"Poly({self.format()!r}, {self.field!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "s") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            neg = isinstance(self.field, Rationals) and c < 0
            mag = -c if neg else c
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            terms.append(("-" if neg else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_strings(self) -> list[str]:
        return [self.field.format(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence, field=QQ) -> "Poly":
        return cls([field(c) for c in items], field)


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    field = a.field
    if len(a.coeffs) < len(b.coeffs):
        return Poly._raw(field, ()), a
    norm = field.norm
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv_lc = field.inv(b.coeffs[-1])
    q = [field.zero] * (len(rem) - db)
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = norm(c * inv_lc)
        q[k - db] = f
        off = k - db
        for j in range(db + 1):
            rem[off + j] = norm(rem[off + j] - f * bc[j])
    return Poly._trim(field, q), Poly._trim(field, rem[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while b.coeffs:
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    """Monic lcm; the lcm with zero is zero."""
    if not a.coeffs or not b.coeffs:
        return Poly.zero(a.field)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class RatFunc:
    """Reduced fraction ``num/den`` with monic denominator; zero is ``0/1``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.field)
        if not den.coeffs:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.coeffs:
            num, den = num, Poly.one(num.field)
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.coeffs[-1]
            if lc != 1:
                inv = num.field.inv(lc)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @property
    def field(self):
        return self.num.field

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        r = object.__new__(cls)
        r.num = p
        r.den = Poly.one(p.field)
        r._hash = None
        return r

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    @property
    def degree(self):
        """``deg num - deg den`` (``NEG_INF`` for zero)."""
        if not self.num.coeffs:
            return NEG_INF
        return self.num.deg() - self.den.deg()

    def valuation(self):
        """Order of ``s`` in the fraction (``POS_INF`` for zero)."""
        if not self.num.coeffs:
            return POS_INF
        return self.num.valuation() - self.den.valuation()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_poly(Poly((other,), self.field))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RatFunc)
        r.num, r.den, r._hash = -self.num, self.den, None
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def subs_inverse(self) -> "RatFunc":
        """Substitute ``s -> 1/s`` and reduce."""
        if self.is_zero():
            return self
        a, b = self.num.deg(), self.den.deg()
        num, den = self.num.reverse(), self.den.reverse()
        # num(1/s)/den(1/s) = s**(b - a) * rev(num)/rev(den)
        if b >= a:
            num = num.shift(b - a)
        else:
            den = den.shift(a - b)
        return RatFunc(num, den)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __getstate__(self):
        return (self.num, self.den)

    def __setstate__(self, state):
        self.num, self.den = state
        self._hash = None

    def __repr__(self):
        return f"RatFunc({self.num.format()!r}, {self.den.format()!r})"

    def __str__(self):
        if self.den.is_one():
            return self.num.format()
        return f"({self.num.format()})/({self.den.format()})"


def ratfunc_make(num: Poly, den: Poly) -> RatFunc:
    return RatFunc(num, den)

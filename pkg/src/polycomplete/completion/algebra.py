"""Chain accessors, the Delta degree helpers and the existence/interlacing tests."""
from __future__ import annotations

import math
from functools import lru_cache

from ..field_poly import Poly, RatFunc, poly_gcd, poly_lcm
from ..structure import StructuralData
from .prescribed import Condition, PrescribedDataError, make_verdict, normalize_ring

POS = math.inf
NEG = -math.inf


class Ladder:
    """A finite chain read with 1-based indices and fixed values outside its range."""

    __slots__ = ("items", "below", "above")

    def __init__(self, items, below, above):
        self.items = tuple(items)
        self.below = below
        self.above = above

    def __call__(self, i: int):
        if i < 1:
            return self.below
        if i > len(self.items):
            return self.above
        return self.items[i - 1]

    def __len__(self):
        return len(self.items)


def numerators(chain, field) -> Ladder:
    """Numerator / invariant factor chain: 1 before the start, 0 after the end."""
    return Ladder(chain, Poly.one(field), Poly.zero(field))


def denominators(chain, field) -> Ladder:
    """Denominator chain (divisibility reversed): 0 before the start, 1 after the end."""
    return Ladder(chain, Poly.zero(field), Poly.one(field))


def orders_ladder(orders) -> Ladder:
    """Non-decreasing orders at infinity: -inf before the start, +inf after the end."""
    return Ladder(orders, NEG, POS)


@lru_cache(maxsize=1 << 16)
def lcm_degree(a: Poly, b: Poly):
    return poly_lcm(a, b).degree


@lru_cache(maxsize=1 << 16)
def gcd_degree(a: Poly, b: Poly):
    return poly_gcd(a, b).degree


def _split(f):
    if isinstance(f, RatFunc):
        return f.num, f.den
    if isinstance(f, Poly):
        return f, Poly.one(f.field)
    return f


def delta(f, g=None, p=None, q=None) -> int:
    """The four Delta forms.

    ``delta(e/f, g/h, p, q) = deg lcm(e,g) - deg gcd(f,h) + max(p,q)``,
    ``delta(e/f, g/h)`` drops the max, ``delta(e/f, p) = deg e - deg f + p`` and
    ``delta(e/f) = deg e - deg f``.  Fractions may be :class:`RatFunc` values,
    polynomials, or ``(num, den)`` pairs.
    """
    if isinstance(g, int) and not isinstance(g, bool):
        if q is not None:
            raise TypeError("delta(f, p) takes no q")
        g, p = None, g
    eta, phi = _split(f)
    if g is None:
        out = eta.deg() - phi.deg()
        return out + p if p is not None else out
    eps, psi = _split(g)
    out = lcm_degree(eta, eps) - gcd_degree(phi, psi)
    if (p is None) != (q is None):
        raise TypeError("delta with two fractions takes both orders or neither")
    return out + max(p, q) if p is not None else out


def lcm_scaled_identity_check(phi: Poly, eta: Poly, psi: Poly, eps: Poly, pi: Poly) -> bool:
    """``lcm(pi/phi * eta, pi/psi * eps) == pi/gcd(phi,psi) * lcm(eta, eps)``."""
    if not phi.divides(pi) or not psi.divides(pi):
        raise ValueError("phi and psi must divide pi")
    if not poly_gcd(phi, eta).is_one() or not poly_gcd(psi, eps).is_one():
        raise ValueError("eta/phi and eps/psi must be reduced")
    lhs = poly_lcm(pi.exact_div(phi) * eta, pi.exact_div(psi) * eps)
    rhs = (pi.exact_div(poly_gcd(phi, psi)) * poly_lcm(eta, eps)).monic()
    return lhs == rhs


def exists_with_data(data: StructuralData, ring: str = "polynomial"):
    """Whether some matrix over the given ring has exactly these data.

    The polynomial check is run in two equivalent forms: the orders form
    (sum identity equal to 0) and the degree form with partial
    multiplicities ``e_i = p_i + d`` (``e_1 = 0`` and sum equal to ``r d``).
    """
    ring = normalize_ring(ring)
    try:
        data.check(require_sum=False)
    except Exception as exc:
        raise PrescribedDataError(str(exc)) from exc
    conds = []
    if ring == "polynomial":
        if not data.is_polynomial():
            raise PrescribedDataError("polynomial data must have trivial denominators")
        total = sum(data.cols) + sum(data.rows) + sum(data.orders) + sum(e.deg() for e in data.num)
        conds.append(Condition("sum-identity", "sum c + sum u + sum p + sum deg(alpha) = 0", total == 0, total, 0))
        if data.rank > 0:
            d = -data.orders[0]
            es = [p + d for p in data.orders]
            lhs = sum(data.cols) + sum(data.rows) + sum(es) + sum(e.deg() for e in data.num)
            degree_form = d >= 0 and es[0] == 0 and lhs == data.rank * d
            if degree_form != (total == 0 and d >= 0):
                raise AssertionError("degree and orders forms of the existence test disagree")
            conds.append(Condition("degree-nonnegative", "d = -p_1 >= 0", d >= 0, d, 0))
    else:
        total = data.invariant_sum()
        conds.append(
            Condition(
                "sum-identity", "sum c + sum u + sum p + sum deg(eta) - sum deg(phi) = 0", total == 0, total, 0
            )
        )
    return make_verdict("exists", ring, conds)


def interlace_finite(source_num, source_den, target_num, target_den, z: int, q: int = 0, field=None):
    """Interlacing for bordering by ``z`` rows and ``q`` columns.

    Numerators: ``eps_i | eta_i | eps_{i+z+q}``; denominators (if given):
    ``psi_{i+z+q} | phi_i | psi_i``.  Pass ``None`` denominators for the
    polynomial statement.
    """
    if field is None:
        sample = next(iter(tuple(source_num) + tuple(target_num)), None)
        field = sample.field if sample is not None else None
    conds = [numerator_interlacing(source_num, target_num, z + q, field)]
    if source_den is not None or target_den is not None:
        one = (Poly.one(field),)
        sd = tuple(source_den) if source_den is not None else one * len(source_num)
        td = tuple(target_den) if target_den is not None else one * len(target_num)
        conds.append(denominator_interlacing(sd, td, z + q, field))
    ring = "polynomial" if source_den is None and target_den is None else "rational"
    return make_verdict("fin", ring, conds)


def numerator_interlacing(src, tgt, shift: int, field, cid: str = "num-interlacing") -> Condition:
    T = numerators(tgt, field)
    bad = None
    for i, a in enumerate(src, start=1):
        if not (T(i).divides(a) and a.divides(T(i + shift))):
            bad = i
            break
    return Condition(
        cid, f"eps_i | eta_i | eps_(i+{shift}) for 1 <= i <= r", bad is None,
        None if bad is None else f"i={bad}", None,
    )


def denominator_interlacing(src, tgt, shift: int, field, cid: str = "den-interlacing") -> Condition:
    T = denominators(tgt, field)
    bad = None
    for i, f in enumerate(src, start=1):
        if not (T(i + shift).divides(f) and f.divides(T(i))):
            bad = i
            break
    return Condition(
        cid, f"psi_(i+{shift}) | phi_i | psi_i for 1 <= i <= r", bad is None,
        None if bad is None else f"i={bad}", None,
    )


def orders_interlacing(src, tgt, shift: int, cid: str = "orders-interlacing") -> Condition:
    Q = orders_ladder(tgt)
    bad = next((i for i, p in enumerate(src, start=1) if not (Q(i) <= p <= Q(i + shift))), None)
    return Condition(
        cid, f"q_i <= p_i <= q_(i+{shift}) for 1 <= i <= r", bad is None,
        None if bad is None else f"i={bad}", None,
    )

"""Row completion predicates for complete and partial prescribed data.

Every predicate records all of its conditions (no short-circuit).  The
hypothesis ``0 <= x <= min(z, n - r)`` is checked first; when it fails the
verdict is ``hypothesis-violated`` rather than ``infeasible``.
"""
from __future__ import annotations

from ..field_poly import Poly, poly_lcm
from ..majorization import ell_index, gen_majorize_detail, majorize, positive_count
from ..structure import StructuralData
from .algebra import denominator_interlacing, numerator_interlacing, orders_interlacing
from .prescribed import (
    Condition,
    PrescribedData,
    PrescribedDataError,
    Verdict,
    make_verdict,
    normalize_ring,
)
from .sequences import PolyTerms, RatTerms, difference


# -- shared pieces -----------------------------------------------------------------

def _check_source(source: StructuralData, ring: str) -> None:
    try:
        source.check(require_sum=False)
    except Exception as exc:
        raise PrescribedDataError(f"source data malformed: {exc}") from exc
    if ring == "polynomial" and not source.is_polynomial():
        raise PrescribedDataError("polynomial ring needs a polynomial source")


def _hypothesis(source: StructuralData, target: PrescribedData) -> Condition:
    bound = min(target.z, source.n - source.rank)
    ok = 0 <= target.x <= bound
    return Condition("hyp-rank-increment", "0 <= x <= min(z, n - r)", ok, target.x, bound)


def _prepare(source, target, ring, mode):
    ring = normalize_ring(ring)
    if target.mode != mode:
        raise PrescribedDataError(f"expected a {mode} target, got {target.mode}")
    _check_source(source, ring)
    if target.z < 0:
        raise PrescribedDataError("z must be non-negative")
    hyp = _hypothesis(source, target)
    if not hyp.holds:
        return ring, make_verdict(mode, ring, [hyp], hypothesis=True)
    target.validate(source)
    if ring == "polynomial" and not target.is_polynomial():
        raise PrescribedDataError("polynomial ring needs trivial target denominators")
    if target.z == 0:
        return ring, _literal(source, target, ring)
    return ring, None


def _literal(source: StructuralData, target: PrescribedData, ring: str) -> Verdict:
    """``z = 0``: nothing is added, so the target must equal the source data."""
    conds = []
    if target.num is not None:
        conds.append(Condition("z0-finite", "target invariant functions equal the source ones",
                               target.num == source.num and target.den == source.den))
    if target.orders is not None:
        want = source.orders[: len(target.orders)]
        conds.append(Condition("z0-orders", "target orders equal the source ones", target.orders == want,
                               target.orders, want))
    if target.cols is not None:
        conds.append(Condition("z0-cols", "target column indices equal c", target.cols == source.cols,
                               target.cols, source.cols))
    if target.rows is not None:
        conds.append(Condition("z0-rows", "target row indices equal u", target.rows == source.rows,
                               target.rows, source.rows))
    return make_verdict(target.mode, ring, conds)


def _gmaj(cid: str, what: str, c, d, a) -> list[Condition]:
    out = []
    for name, ok, lhs, rhs in gen_majorize_detail(c, d, a):
        out.append(Condition(f"{cid}.{name}", what, ok, lhs, rhs))
    return out


def _ineq(cid: str, desc: str, lhs: int, rhs: int, equality: bool) -> Condition:
    if equality:
        return Condition(cid, desc.replace(" <= ", " = ") + " (equality case)", lhs == rhs, lhs, rhs)
    return Condition(cid, desc, lhs <= rhs, lhs, rhs)


def _eta_count(source, target) -> Condition:
    eta, eta_bar = positive_count(source.rows), positive_count(target.rows)
    return Condition("eta-count", "number of positive target row indices >= that of u", eta_bar >= eta,
                     eta_bar, eta)


def _finite_interlacing(source, target, ring, t) -> list[Condition]:
    field = t.field
    conds = [numerator_interlacing(source.num, target.num, target.z, field)]
    if ring == "rational":
        conds.append(denominator_interlacing(source.den, target.den, target.z, field))
    return conds


def _ell_conditions(c, a, x: int, tag: str) -> list[Condition]:
    """``sum_{i<=x+1} c_i - c_l >= sum a`` and the tail sums for ``l <= j <= x-1``."""
    ell = ell_index(c, a)
    c = list(c)
    lhs = sum(c[: x + 1]) - c[ell - 1]
    conds = [Condition(f"{tag}.ell-sum", f"sum_(i<=x+1) c_i - c_l >= sum a (l={ell})", lhs >= sum(a), lhs, sum(a))]
    for j in range(ell, x):
        l2, r2 = sum(c[j + 1: x + 1]), sum(a[j:x])
        conds.append(Condition(f"{tag}.ell-tail[{j}]", "sum_(i=j+2..x+1) c_i >= sum_(i=j+1..x) a_i", l2 >= r2, l2, r2))
    return conds


# -- complete structural data --------------------------------------------------------

def _complete_polynomial(source, target) -> tuple[list[Condition], dict]:
    t = PolyTerms(source, target)
    x, z = target.x, target.z
    a_pre = [t.a_prefix(j) for j in range(1, x + 1)]
    b_pre = [t.b_prefix(j) for j in range(1, z - x + 1)]
    a, b = difference(a_pre), difference(b_pre)
    conds = [
        numerator_interlacing(source.num, target.num, z, t.field, "finite-interlacing"),
        orders_interlacing(source.orders, target.orders, z),
        _eta_count(source, target),
    ]
    conds += _gmaj("col-majorization", "c <' (d, a)", source.cols, target.cols, a)
    conds += _gmaj("row-majorization", "v <' (u, b)", target.rows, source.rows, b)
    lhs, rhs = t.degree_sides()
    conds.append(_ineq("degree-sum", "sum deg lcm(alpha_i, beta_(i+x)) + sum max(p_i, q_(i+x)) <= "
                       "sum v - sum u + sum deg beta_(i+x) + sum q_(i+x)", lhs, rhs, x == 0))
    return conds, {"a": a, "b": b}


def _complete_rational(source, target) -> tuple[list[Condition], dict]:
    t = RatTerms(source, target)
    x, z = target.x, target.z
    a = difference([t.row_a_prefix(j) for j in range(1, x + 1)])
    b = difference([t.row_b_prefix(j) for j in range(1, z - x + 1)])
    conds = [_eta_count(source, target)]
    conds += _finite_interlacing(source, target, "rational", t)
    conds.append(orders_interlacing(source.orders, target.orders, z))
    conds += _gmaj("col-majorization", "c <' (d, a~)", source.cols, target.cols, a)
    conds += _gmaj("row-majorization", "v <' (u, b~)", target.rows, source.rows, b)
    lhs, rhs = t.row_degree_sides()
    conds.append(_ineq("degree-sum", "sum D(eta_i/phi_i, eps_(i+x)/psi_(i+x), p_i, q_(i+x)) - "
                       "sum D(eps_(i+x)/psi_(i+x), q_(i+x)) <= sum v - sum u", lhs, rhs, x == 0))
    return conds, {"a": a, "b": b}


def scaling_polynomial(source: StructuralData, target: PrescribedData) -> Poly:
    """``lcm(phi_1, psi_1)``: the smallest scaling making both data polynomial."""
    field = source.field or target.num[0].field
    one = Poly.one(field)
    phi1 = source.den[0] if source.den else one
    psi1 = target.den[0] if target.den else one
    return poly_lcm(phi1, psi1)


def scale_pair(source: StructuralData, target: PrescribedData, pi: Poly):
    """Data of ``pi R`` and the target of ``pi [R; W]`` (factors ``pi eta/phi``, orders minus ``deg pi``)."""
    k = pi.deg()
    one = Poly.one(pi.field)
    src = StructuralData(
        source.m, source.n, source.rank,
        tuple((pi * e).exact_div(f) for e, f in zip(source.num, source.den)),
        (one,) * source.rank,
        tuple(p - k for p in source.orders),
        source.cols, source.rows, pi.field,
    )
    tgt = PrescribedData(
        target.mode, target.z, target.x,
        num=None if target.num is None else tuple((pi * e).exact_div(f) for e, f in zip(target.num, target.den)),
        den=None if target.num is None else (one,) * len(target.num),
        orders=None if target.orders is None else tuple(q - k for q in target.orders),
        cols=target.cols, rows=target.rows,
    )
    return src, tgt


def complete_row_completion(source: StructuralData, target: PrescribedData, ring: str = "polynomial") -> Verdict:
    """Row completion with the complete structural data of ``[P; W]`` prescribed.

    Over the rational ring the Delta-form conditions are evaluated and, as a
    consistency check, compared against the polynomial conditions on the
    data scaled by ``lcm(phi_1, psi_1)``.
    """
    ring, early = _prepare(source, target, ring, "complete")
    if early is not None:
        return early
    if ring == "polynomial":
        conds, seqs = _complete_polynomial(source, target)
        return make_verdict("complete", ring, conds, seqs)
    conds, seqs = _complete_rational(source, target)
    verdict = make_verdict("complete", ring, conds, seqs)
    pi = scaling_polynomial(source, target)
    s2, t2 = scale_pair(source, target, pi)
    pconds, pseqs = _complete_polynomial(s2, t2)
    if all(c.holds for c in pconds) != verdict.feasible or pseqs != seqs:
        raise AssertionError("rational conditions disagree with the scaled polynomial conditions")
    return verdict


# -- finite + infinite + one family of minimal indices -------------------------------

def fin_inf_col_completion(source: StructuralData, target: PrescribedData, ring: str = "rational") -> Verdict:
    """Finite and infinite structures plus the column minimal indices of ``[R; W]``."""
    ring, early = _prepare(source, target, ring, "fin-inf-col")
    if early is not None:
        return early
    t = RatTerms(source, target)
    x, z = target.x, target.z
    a = difference([t.col_a_prefix(j) for j in range(1, x + 1)])
    conds = _finite_interlacing(source, target, ring, t)
    conds.append(orders_interlacing(source.orders, target.orders, z))
    conds += _gmaj("col-majorization", "c <' (d, a~)", source.cols, target.cols, a)
    lhs, rhs = t.col_degree_sides()
    conds.append(_ineq("col-degree-sum", "sum D(eta_i/phi_i, eps_(i+x)/psi_(i+x), p_i, q_(i+x)) <= "
                       "sum c - sum d + sum D(eta_i/phi_i, p_i) - sum_(i<=x) D(eps_i/psi_i, q_i)",
                       lhs, rhs, x == z))
    return make_verdict("fin-inf-col", ring, conds, {"a": a})


def fin_inf_row_completion(source: StructuralData, target: PrescribedData, ring: str = "rational") -> Verdict:
    """Finite and infinite structures plus the row minimal indices of ``[R; W]``."""
    ring, early = _prepare(source, target, ring, "fin-inf-row")
    if early is not None:
        return early
    t = RatTerms(source, target)
    x, z = target.x, target.z
    n_r = source.n - source.rank
    a = difference([t.row_a_prefix(j) for j in range(1, x + 1)])
    b = difference([t.row_b_prefix(j) for j in range(1, z - x + 1)])
    conds = [_eta_count(source, target)]
    conds += _finite_interlacing(source, target, ring, t)
    conds.append(orders_interlacing(source.orders, target.orders, z))
    conds += _gmaj("row-majorization", "v <' (u, b~)", target.rows, source.rows, b)
    lhs, rhs = t.row_degree_sides()
    conds.append(_ineq("degree-sum", "sum D(eta_i/phi_i, eps_(i+x)/psi_(i+x), p_i, q_(i+x)) - "
                       "sum D(eps_(i+x)/psi_(i+x), q_(i+x)) <= sum v - sum u", lhs, rhs, x == 0))
    if x == n_r:
        conds.append(Condition("col-majorization", "c < a~ (x = n - r)", majorize(source.cols, a),
                               tuple(source.cols), a))
    else:
        conds += _ell_conditions(source.cols, a, x, "col")
    return make_verdict("fin-inf-row", ring, conds, {"a": a, "b": b})


# -- finite and/or infinite structure ------------------------------------------------

def fin_inf_completion(source: StructuralData, target: PrescribedData, ring: str = "rational") -> Verdict:
    """Finite and infinite structures of ``[R; W]`` prescribed."""
    ring, early = _prepare(source, target, ring, "fin-inf")
    if early is not None:
        return early
    t = RatTerms(source, target)
    x, z, r = target.x, target.z, source.rank
    n_r = source.n - r
    c = list(source.cols)
    conds = _finite_interlacing(source, target, ring, t)
    conds.append(orders_interlacing(source.orders, target.orders, z))
    seqs = {}
    if x < z or x == n_r:
        for j in range(0, x):
            lhs = (
                sum(t.d4(i, i + x - j) for i in range(1, r + 1))
                + sum(t.t2(i) for i in range(1, x - j + 1))
                + sum(source.rows)
                + sum(c[:j])
                + sum(c[x:])
            )
            conds.append(_ineq(f"fin-inf[{j}]", "sum D(eta_i/phi_i, eps_(i+x-j)/psi_(i+x-j), p_i, q_(i+x-j)) + "
                               "sum_(i<=x-j) D(eps_i/psi_i, q_i) + sum u + sum_(i<=j) c_i + sum_(i>x) c_i <= 0",
                               lhs, 0, j == 0 and x == z == n_r))
    else:
        a = difference([t.fi_a_prefix(j) for j in range(1, x + 1)])
        seqs["a'"] = a
        conds += _ell_conditions(c, a, x, "col")
    return make_verdict("fin-inf", ring, conds, seqs)


def inf_only_completion(source: StructuralData, target: PrescribedData, ring: str = "polynomial") -> Verdict:
    """Only the orders at infinity of the completed matrix prescribed."""
    ring, early = _prepare(source, target, ring, "inf")
    if early is not None:
        return early
    x, z = target.x, target.z
    p, q, c = list(source.orders), target.orders, list(source.cols)
    conds = [orders_interlacing(p, q, z)]
    if ring == "polynomial":
        from .algebra import orders_ladder

        Q = orders_ladder(q)
        for j in range(0, x):
            lhs = sum(max(p[i - 1], Q(i + x - j)) for i in range(1, len(p) + 1)) + sum(q[: x - j]) - sum(p)
            rhs = sum(c[j:x])
            conds.append(Condition(f"inf-max[{j}]", "sum max(p_i, q_(i+x-j)) + sum_(i<=x-j) q_i - sum p "
                                   "<= sum_(i=j+1..x) c_i", lhs <= rhs, lhs, rhs))
    return make_verdict("inf", ring, conds)


def fin_only_completion(source: StructuralData, target: PrescribedData, ring: str = "polynomial") -> Verdict:
    """Only the finite structure prescribed (degree left free)."""
    ring, early = _prepare(source, target, ring, "fin")
    if early is not None:
        return early
    t = RatTerms(source, target)
    return make_verdict("fin", ring, _finite_interlacing(source, target, ring, t))


def fin_first_order_completion(source: StructuralData, target: PrescribedData, ring: str = "rational") -> Verdict:
    """Finite structure and the first order at infinity (the degree, for polynomials)."""
    ring, early = _prepare(source, target, ring, "fin-first-order")
    if early is not None:
        return early
    t = RatTerms(source, target)
    x, r = target.x, source.rank
    c = list(source.cols)
    q1 = target.first_order
    p1 = source.orders[0] if source.orders else None
    hyp_ok = q1 is None or p1 is None or q1 <= p1
    hyp = Condition("hyp-first-order", "q_1 <= p_1", hyp_ok, q1, p1)
    conds = _finite_interlacing(source, target, ring, t)
    for j in range(0, x):
        lhs = (
            sum(t.d2(i, i + x - j) for i in range(1, r + 1))
            + sum(t.t1(i) for i in range(1, x - j + 1))
            - sum(t.s1(i) for i in range(1, r + 1))
        )
        rhs = sum(c[j:x]) + (j - x) * q1
        conds.append(Condition(f"first-order[{j}]", "sum D(eta_i/phi_i, eps_(i+x-j)/psi_(i+x-j)) + "
                               "sum_(i<=x-j) D(eps_i/psi_i) - sum D(eta_i/phi_i) <= sum_(i=j+1..x) c_i + (j-x) q_1",
                               lhs <= rhs, lhs, rhs))
    if not hyp_ok:
        return make_verdict("fin-first-order", ring, [hyp] + conds, hypothesis=True)
    return make_verdict("fin-first-order", ring, [hyp] + conds)


ROW_PREDICATES = {
    "complete": complete_row_completion,
    "fin-inf-col": fin_inf_col_completion,
    "fin-inf-row": fin_inf_row_completion,
    "fin-inf": fin_inf_completion,
    "inf": inf_only_completion,
    "fin": fin_only_completion,
    "fin-first-order": fin_first_order_completion,
}


def check(source: StructuralData, target: PrescribedData, ring: str = "polynomial") -> Verdict:
    """Dispatch on ``target.mode``."""
    return ROW_PREDICATES[target.mode](source, target, ring)

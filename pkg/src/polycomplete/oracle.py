"""Brute-force ground truth over small prime fields.

Every ``z x n`` matrix ``W`` with entries of degree at most ``g`` is
appended to the source and the structural data of the stack are recorded.
Since a completion with first order ``q_1`` has degree ``-q_1``, the search
decides every target whose implied degree is at most ``g``.
"""
from __future__ import annotations

import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .completion import check, complete_row_completion
from .completion.prescribed import PrescribedData, PrescribedDataError
from .field_poly import GF, QQ, Poly, RatFunc
from .majorization import partitions
from .polymatrix import PolyMatrix, RatMatrix
from .structure import StructuralData, complete_structural_data

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 1 << 24


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchSpace:
    field: GF
    source: PolyMatrix
    z: int
    degree: int
    x: int | None = None

    def __post_init__(self):
        if not isinstance(self.field, GF):
            raise ValueError("search spaces live over a prime field")
        if self.z < 0 or self.degree < 0:
            raise ValueError("z and the degree bound must be non-negative")

    @property
    def n(self) -> int:
        return self.source.cols

    @property
    def slots(self) -> int:
        return self.z * self.n * (self.degree + 1)

    def size(self) -> int:
        return self.field.p ** self.slots

    def matrix(self, index: int) -> PolyMatrix:
        """The ``index``-th ``W`` in the enumeration order (base-p digits)."""
        p = self.field.p
        digits = []
        for _ in range(self.slots):
            index, dgt = divmod(index, p)
            digits.append(dgt)
        k = self.degree + 1
        entries = []
        pos = 0
        for _ in range(self.z):
            row = []
            for _ in range(self.n):
                row.append(Poly(digits[pos:pos + k], self.field))
                pos += k
            entries.append(row)
        return PolyMatrix(entries, self.field, cols=self.n)

    def stacked(self, W: PolyMatrix) -> PolyMatrix:
        return self.source.vstack(W) if self.z else self.source


@dataclass
class AchievableSet:
    """Structural data reached by some ``W`` of the space, with the first witness found."""

    space: SearchSpace
    members: dict
    exhaustive: bool = True
    source_data: StructuralData | None = None

    def __contains__(self, data) -> bool:
        return data in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def projections(self, mode: str) -> set:
        r = self.source_data.rank
        out = set()
        for d in self.members:
            x = d.rank - r
            if self.space.x is not None and x != self.space.x:
                continue
            out.add(PrescribedData.from_structural(d, mode, self.space.z, x))
        return out


def _scan(space: SearchSpace, indices) -> dict:
    found = {}
    for idx in indices:
        W = space.matrix(idx)
        data = complete_structural_data(space.stacked(W))
        if data not in found:
            found[data] = (idx, W)
    return found


def _scan_range(args):
    space, lo, hi = args
    return _scan(space, range(lo, hi))


def enumerate_completions(space: SearchSpace, budget: int = DEFAULT_BUDGET, randomized: bool = False,
                          seed: int = 0, jobs: int = 1) -> AchievableSet:
    """Exhaustive (or, past the budget and if allowed, sampled) achievable set."""
    total = space.size()
    source_data = complete_structural_data(space.source)
    if total > budget:
        if not randomized:
            raise BudgetExceeded(f"search space has {total} candidates, budget is {budget}")
        rng = random.Random(seed)
        indices = sorted({rng.randrange(total) for _ in range(budget)})
        found = _scan(space, indices)
        exhaustive = False
    elif jobs > 1 and total >= 64:
        step = -(-total // (jobs * 4))
        chunks = [(space, lo, min(lo + step, total)) for lo in range(0, total, step)]
        found = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_range, chunks):
                for data, hit in part.items():
                    if data not in found or hit[0] < found[data][0]:
                        found[data] = hit
        exhaustive = True
    else:
        found = _scan(space, range(total))
        exhaustive = True
    members = {d: w for d, (_, w) in sorted(found.items(), key=lambda kv: kv[1][0])}
    if space.x is not None:
        members = {d: w for d, w in members.items() if d.rank - source_data.rank == space.x}
    return AchievableSet(space, members, exhaustive, source_data)


# -- candidate targets -----------------------------------------------------------------

def implied_degree(target: PrescribedData):
    """``-q_1`` if the target fixes it, ``-inf``-like ``None`` for rank 0, else ``'free'``."""
    if target.orders is None:
        return "free"
    if not target.orders:
        return None
    return -target.orders[0]


def _sorted_orders(q):
    return all(a <= b for a, b in zip(q, q[1:]))


def _is_partition(v):
    return all(a >= b for a, b in zip(v, v[1:])) and all(e >= 0 for e in v)


def _bumps(seq, lo=None):
    """Sequences differing from ``seq`` by +-1 in one position."""
    for i in range(len(seq)):
        for dlt in (1, -1):
            t = list(seq)
            t[i] += dlt
            yield i, dlt, tuple(t)


def _chain_variants(num, field):
    """Finite-structure perturbations that keep a divisibility chain."""
    s = Poly.s(field)
    others = [s, s + Poly.one(field)]
    out = []
    for i in range(len(num)):
        for f in others:
            out.append(tuple(e * f if k >= i else e for k, e in enumerate(num)))
            if all(f.divides(e) for e in num[: i + 1]):
                out.append(tuple(e.exact_div(f) if k <= i else e for k, e in enumerate(num)))
    return out


def near_misses(data: StructuralData, field) -> set:
    """Targets one perturbation away from ``data`` (single shifts and sum-preserving pairs).

    Only well-formed complete data are returned (chains, sorted orders, partitions).
    """
    out = set()
    fams = {"orders": data.orders, "cols": data.cols, "rows": data.rows}
    singles = []
    for name, seq in fams.items():
        for i, dlt, t in _bumps(seq):
            ok = _sorted_orders(t) if name == "orders" else _is_partition(t)
            if ok:
                singles.append((name, i, dlt, t))
    for name, _, _, t in singles:
        out.add(_replace(data, **{name: t}))
    # pairs moving one unit between two positions, keeping the sum identity
    for (n1, i1, d1, _), (n2, i2, d2, _) in itertools.combinations(singles, 2):
        if d1 + d2 != 0 or (n1 == n2 and i1 == i2):
            continue
        seqs = {k: list(v) for k, v in fams.items()}
        seqs[n1][i1] += d1
        seqs[n2][i2] += d2
        if _sorted_orders(seqs["orders"]) and _is_partition(seqs["cols"]) and _is_partition(seqs["rows"]):
            out.add(_replace(data, **{k: tuple(v) for k, v in seqs.items()}))
    if data.is_polynomial():
        one = Poly.one(field)
        for num in _chain_variants(data.num, field):
            out.add(_replace(data, num=num, den=(one,) * len(num)))
            # pair the degree change with an order shift to keep the sum identity
            dd = sum(e.deg() for e in num) - sum(e.deg() for e in data.num)
            for i in range(len(data.orders)):
                t = list(data.orders)
                t[i] -= dd
                if _sorted_orders(t):
                    out.add(_replace(data, num=num, den=(one,) * len(num), orders=tuple(t)))
    out.discard(data)
    return out


def _replace(data: StructuralData, **kw) -> StructuralData:
    vals = dict(m=data.m, n=data.n, rank=data.rank, num=data.num, den=data.den, orders=data.orders,
                cols=data.cols, rows=data.rows, coeff_field=data.coeff_field)
    vals.update(kw)
    return StructuralData(**vals)


def candidate_targets(achievable: AchievableSet, mode: str, extra=()) -> set:
    """Projected achievable data, their near misses, and any extra complete data."""
    field = achievable.space.field
    src = achievable.source_data
    z = achievable.space.z
    pool = set(achievable.members) | set(extra)
    for d in list(achievable.members):
        pool |= near_misses(d, field)
    out = set()
    for d in pool:
        if d.m != src.m + z or d.n != src.n:
            continue
        x = d.rank - src.rank
        if x < 0:
            continue
        try:
            t = PrescribedData.from_structural(d, mode, z, x)
            t.validate(src)
        except PrescribedDataError:
            continue
        out.add(t)
    return out


# -- differential testing -----------------------------------------------------------------

_VERDICT_CACHE: dict = {}


def cached_check(source: StructuralData, target: PrescribedData, ring: str) -> bool:
    key = (source, target, ring)
    hit = _VERDICT_CACHE.get(key)
    if hit is None:
        hit = check(source, target, ring).feasible
        if len(_VERDICT_CACHE) > 1_000_000:
            _VERDICT_CACHE.clear()
        _VERDICT_CACHE[key] = hit
    return hit


@dataclass
class Disagreement:
    target: PrescribedData
    predicted: bool
    expected: bool
    witness: object = None


@dataclass
class Report:
    label: str
    mode: str
    checked: int = 0
    skipped: int = 0
    feasible: int = 0
    disagreements: list = field(default_factory=list)

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.skipped += other.skipped
        self.feasible += other.feasible
        self.disagreements.extend(other.disagreements)
        return self

    def lines(self) -> list[str]:
        out = [f"{self.label} mode={self.mode} checked={self.checked} feasible={self.feasible} "
               f"skipped={self.skipped} disagreements={len(self.disagreements)}"]
        for d in self.disagreements:
            out.append(f"  DISAGREE predicted={d.predicted} search={d.expected} target={describe_target(d.target)}")
        return out

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "mode": self.mode,
            "checked": self.checked,
            "feasible": self.feasible,
            "skipped": self.skipped,
            "disagreements": [
                {"target": describe_target(d.target), "predicted": d.predicted, "search": d.expected}
                for d in self.disagreements
            ],
        }


def describe_target(t: PrescribedData) -> str:
    parts = [f"z={t.z}", f"x={t.x}"]
    if t.num is not None:
        parts.append("eps=(" + ", ".join(e.format() for e in t.num) + ")")
        if any(not d.is_one() for d in t.den):
            parts.append("psi=(" + ", ".join(d.format() for d in t.den) + ")")
    if t.orders is not None:
        parts.append(f"q={list(t.orders)}")
    if t.cols is not None:
        parts.append(f"d={list(t.cols)}")
    if t.rows is not None:
        parts.append(f"v={list(t.rows)}")
    return " ".join(parts)


def differential_test(space: SearchSpace, mode: str = "complete", ring: str = "polynomial",
                      achievable: AchievableSet | None = None, extra=(), budget: int = DEFAULT_BUDGET) -> Report:
    """Compare a predicate with search membership on every decidable candidate target."""
    if achievable is None:
        achievable = enumerate_completions(space, budget=budget)
    if not achievable.exhaustive:
        raise ValueError("differential testing needs an exhaustive achievable set")
    src = achievable.source_data
    reachable = achievable.projections(mode)
    report = Report(f"GF({space.field.p}) {space.source.rows}x{space.source.cols} z={space.z} g={space.degree}", mode)
    bound = max(space.degree, space.source.degree if not space.source.is_zero() else 0)
    for t in sorted(candidate_targets(achievable, mode, extra), key=describe_target):
        deg = implied_degree(t)
        decidable = deg is None or (deg != "free" and deg <= space.degree and bound <= space.degree)
        predicted = cached_check(src, t, ring)
        expected = t in reachable
        if not decidable:
            # degree-free targets: only the soundness direction is decided by search
            if expected and not predicted:
                report.disagreements.append(Disagreement(t, predicted, expected))
            report.skipped += 1
            continue
        report.checked += 1
        report.feasible += predicted
        if predicted != expected:
            report.disagreements.append(Disagreement(t, predicted, expected))
    return report


# -- existential projections of the complete predicate -------------------------------

def monic_polys(field, max_degree: int):
    for d in range(0, max_degree + 1):
        for tail in itertools.product(range(field.p), repeat=d):
            yield Poly(list(tail) + [1], field)


def divisibility_chains(field, length: int, budget: int):
    """Monic chains ``b_1 | ... | b_length`` over ``field`` with total degree ``<= budget``."""
    if length == 0:
        yield ()
        return
    polys = list(monic_polys(field, budget))

    def extend(prefix, remaining, left):
        if left == 0:
            yield tuple(prefix)
            return
        last = prefix[-1] if prefix else Poly.one(field)
        for f in polys:
            if f.deg() * left > remaining:
                continue
            if last.divides(f):
                yield from extend(prefix + [f], remaining - f.deg(), left - 1)

    yield from extend([], budget, length)


def projection_completions(source: StructuralData, target: PrescribedData, field, degree_bound=None):
    """All complete targets extending ``target`` that the sum identity allows.

    Finite-only targets leave the degree free; they are enumerated only up
    to ``degree_bound`` (``None`` returns ``None``).
    """
    r, z, x = source.rank, target.z, target.x
    rank = r + x
    n_d, n_v = source.n - rank, source.m + z - rank
    if target.mode == "fin" and degree_bound is None:
        return None

    def close(num, orders, known_d, known_v):
        base = sum(orders) + sum(e.deg() for e in num)
        if known_d is not None and known_v is not None:
            yield (num, orders, known_d, known_v)
            return
        if known_d is not None:
            total = -base - sum(known_d)
            for v in partitions(total, n_v) if total >= 0 else ():
                yield (num, orders, known_d, v)
            return
        if known_v is not None:
            total = -base - sum(known_v)
            for d in partitions(total, n_d) if total >= 0 else ():
                yield (num, orders, d, known_v)
            return
        total = -base
        for k in range(0, total + 1):
            for d in partitions(k, n_d):
                for v in partitions(total - k, n_v):
                    yield (num, orders, d, v)

    def one(field_):
        return Poly.one(field_)

    out = []
    if target.mode in ("complete", "fin-inf-col", "fin-inf-row", "fin-inf"):
        parts = close(target.num, target.orders, target.cols, target.rows)
    elif target.mode == "inf":
        budget = -sum(target.orders)
        parts = (
            item
            for chain in (divisibility_chains(field, rank, budget) if budget >= 0 else ())
            for item in close(chain, target.orders, None, None)
        )
    elif target.mode == "fin-first-order":
        if rank == 0:
            parts = close(target.num, (), None, None)
        else:
            q1 = target.orders[0]
            room = -(q1 + sum(e.deg() for e in target.num))
            parts = (
                item
                for tail in _order_tails(q1, rank - 1, room)
                for item in close(target.num, (q1,) + tail, None, None)
            )
    elif target.mode == "fin":
        room = -sum(e.deg() for e in target.num)
        if rank == 0:
            parts = close(target.num, (), None, None)
        else:
            parts = (
                item
                for q1 in range(-degree_bound, room // rank + 1)
                for tail in _order_tails(q1, rank - 1, room - q1)
                for item in close(target.num, (q1,) + tail, None, None)
            )
    else:
        raise ValueError(target.mode)
    for num, orders, d, v in parts:
        den = (one(field),) * len(num)
        out.append(PrescribedData("complete", z, x, num=tuple(num), den=den, orders=tuple(orders),
                                  cols=tuple(d), rows=tuple(v)))
    return out


def _order_tails(q1: int, length: int, room: int):
    """Non-decreasing tails ``q_2 <= ..`` with ``q_i >= q1`` and sum at most ``room``."""
    if length == 0:
        yield ()
        return
    hi = room - (length - 1) * q1
    for a in range(q1, hi + 1):
        for rest in _order_tails(a, length - 1, room - a):
            yield (a,) + rest


def exists_projection(source: StructuralData, target: PrescribedData, field, ring: str = "polynomial",
                      degree_bound=None):
    """Whether some completion of the partial ``target`` passes the complete predicate."""
    options = projection_completions(source, target, field, degree_bound)
    if options is None:
        return None
    for full in options:
        if cached_check(source, full, ring):
            return True
    return False


def projection_test(achievable: AchievableSet, mode: str, extra=(), ring: str = "polynomial") -> Report:
    """Compare a partial predicate with the existential projection of the complete one."""
    src = achievable.source_data
    field = achievable.space.field
    sp = achievable.space
    report = Report(f"GF({field.p}) {sp.source.rows}x{sp.source.cols} z={sp.z} projection", mode)
    for t in sorted(candidate_targets(achievable, mode, extra), key=describe_target):
        # finite-only targets leave the degree free; sum(deg eps) was enough on every instance tried
        bound = max(sp.degree, sum(e.deg() for e in t.num)) if mode == "fin" else None
        expected = exists_projection(src, t, field, ring, degree_bound=bound)
        if expected is None:
            report.skipped += 1
            continue
        predicted = cached_check(src, t, ring)
        report.checked += 1
        report.feasible += predicted
        if predicted != expected:
            report.disagreements.append(Disagreement(t, predicted, expected))
    return report


# -- random instances ---------------------------------------------------------------------

def random_instance(field, m: int, n: int, max_deg: int, seed: int, density: float = 1.0) -> PolyMatrix:
    """Reproducible random polynomial matrix (small integer coefficients over QQ)."""
    rng = random.Random(seed)

    def coeff():
        if isinstance(field, GF):
            return rng.randrange(field.p)
        return Fraction(rng.randint(-3, 3))

    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if rng.random() > density:
                row.append(Poly.zero(field))
                continue
            d = rng.randint(0, max_deg)
            row.append(Poly([coeff() for _ in range(d + 1)], field))
        rows.append(row)
    return PolyMatrix(rows, field, cols=n)


def random_rational_instance(field, m: int, n: int, max_deg: int, seed: int) -> RatMatrix:
    """Random rational matrix whose entries share a few small denominators."""
    rng = random.Random(seed)
    num = random_instance(field, m, n, max_deg, rng.randrange(1 << 30))
    s = Poly.s(field)
    dens = [Poly.one(field), s, s + Poly.one(field), s * s, s * (s + Poly.one(field))]
    rows = []
    for i in range(m):
        row = []
        for j in range(n):
            row.append(RatFunc(num.entries[i][j], rng.choice(dens)))
        rows.append(row)
    return RatMatrix(rows, field, cols=n)


# -- campaigns ---------------------------------------------------------------------------------

PARTIAL_MODES = ("fin-inf-col", "fin-inf-row", "fin-inf", "inf", "fin", "fin-first-order")


def all_matrices(field, m: int, n: int, max_deg: int):
    """Every ``m x n`` matrix over ``field`` with entries of degree at most ``max_deg``."""
    base = SearchSpace(field, PolyMatrix([], field, cols=n), m, max_deg)
    for i in range(base.size()):
        yield base.matrix(i)


def run_campaign(field=None, rows: int = 1, cols: int = 2, source_degree: int = 1, z: int = 1,
                 max_degree: int = 2, mode: str = "complete", ring: str = "polynomial",
                 budget: int = DEFAULT_BUDGET, samples: int | None = None, seed: int = 0, jobs: int = 1) -> Report:
    """Differential campaign over all (or ``samples`` random) sources of one shape.

    ``complete`` compares the predicate with search membership for each
    source; partial modes are compared with search once per distinct source
    data and additionally with the existential projection of the complete
    predicate.  The search only sees polynomial completions, so the rational
    ring is accepted for ``complete`` targets alone (where both rings agree).
    """
    field = field or GF(2)
    if ring not in ("polynomial", "poly") and mode != "complete":
        raise ValueError("search-based campaigns over the rational ring need complete targets")
    per_space = field.p ** (z * cols * (max_degree + 1))
    if samples is None:
        n_sources = field.p ** (rows * cols * (source_degree + 1))
        sources = all_matrices(field, rows, cols, source_degree)
    else:
        n_sources = samples
        sources = (random_instance(field, rows, cols, source_degree, seed + i) for i in range(samples))
    total = n_sources * per_space
    if total > budget:
        raise BudgetExceeded(f"campaign needs {total} candidates, budget is {budget}")
    label = f"GF({field.p}) {rows}x{cols} deg<={source_degree} z={z} g={max_degree}"
    report = Report(label, mode)
    seen = set()
    for P in sources:
        space = SearchSpace(field, P, z, max_degree)
        if mode != "complete":
            data = complete_structural_data(P)
            if data in seen:
                continue
            seen.add(data)
        A = enumerate_completions(space, budget=budget, jobs=jobs)
        report.merge(differential_test(space, mode, ring, achievable=A))
        if mode != "complete":
            report.merge(projection_test(A, mode, ring=ring))
    report.label = label
    return report

"""Prescribed target data, verdicts and sequence-builder outputs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..field_poly import Poly, poly_gcd
from ..structure import StructuralData

MODES = ("complete", "fin-inf-col", "fin-inf-row", "fin-inf", "inf", "fin", "fin-first-order")
RINGS = ("polynomial", "rational")

# which target families each mode prescribes
MODE_FAMILIES = {
    "complete": ("finite", "orders", "cols", "rows"),
    "fin-inf-col": ("finite", "orders", "cols"),
    "fin-inf-row": ("finite", "orders", "rows"),
    "fin-inf": ("finite", "orders"),
    "inf": ("orders",),
    "fin": ("finite",),
    "fin-first-order": ("finite", "first-order"),
}

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
HYPOTHESIS = "hypothesis-violated"


class PrescribedDataError(ValueError):
    """The target is malformed or does not fit the source (dimensions, families, chains)."""


def normalize_ring(ring: str) -> str:
    r = {"poly": "polynomial", "polynomial": "polynomial", "rat": "rational", "rational": "rational"}.get(ring)
    if r is None:
        raise ValueError(f"unknown ring {ring!r}")
    return r


@dataclass(frozen=True)
class PrescribedData:
    """Target data for the completed ``(m+z) x n`` matrix of rank ``r+x``.

    Families the mode leaves free are ``None``.  For ``fin-first-order`` the
    ``orders`` field holds the single first order ``(q_1,)`` (empty when the
    target has rank 0).  A missing ``den`` next to a present ``num`` means
    all denominators are 1.
    """

    mode: str
    z: int
    x: int
    num: Optional[tuple] = None
    den: Optional[tuple] = None
    orders: Optional[tuple] = None
    cols: Optional[tuple] = None
    rows: Optional[tuple] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise PrescribedDataError(f"unknown mode {self.mode!r}")
        for name in ("num", "den", "orders", "cols", "rows"):
            v = getattr(self, name)
            if v is not None and not isinstance(v, tuple):
                object.__setattr__(self, name, tuple(v))
        if self.num is not None and self.den is None:
            one = Poly.one(self.num[0].field) if self.num else None
            object.__setattr__(self, "den", (one,) * len(self.num))

    @property
    def families(self) -> tuple:
        return MODE_FAMILIES[self.mode]

    @property
    def first_order(self):
        if not self.orders:
            return None
        return self.orders[0]

    def is_polynomial(self) -> bool:
        return self.den is None or all(d.is_one() for d in self.den)

    @classmethod
    def from_structural(cls, data: StructuralData, mode: str, z: int, x: int) -> "PrescribedData":
        """Project complete target data onto the families ``mode`` prescribes."""
        fam = MODE_FAMILIES[mode]
        fin = "finite" in fam
        if "orders" in fam:
            orders = data.orders
        elif "first-order" in fam:
            orders = data.orders[:1]
        else:
            orders = None
        return cls(
            mode,
            z,
            x,
            num=data.num if fin else None,
            den=data.den if fin else None,
            orders=orders,
            cols=data.cols if "cols" in fam else None,
            rows=data.rows if "rows" in fam else None,
        )

    def with_mode(self, mode: str) -> "PrescribedData":
        """Drop the families ``mode`` does not prescribe."""
        fam = MODE_FAMILIES[mode]
        if any(f not in self.families and not (f == "first-order" and "orders" in self.families) for f in fam):
            raise PrescribedDataError(f"cannot restrict a {self.mode} target to {mode}")
        fin = "finite" in fam
        orders = self.orders if "orders" in fam else (self.orders[:1] if "first-order" in fam else None)
        return PrescribedData(
            mode, self.z, self.x,
            num=self.num if fin else None,
            den=self.den if fin else None,
            orders=orders,
            cols=self.cols if "cols" in fam else None,
            rows=self.rows if "rows" in fam else None,
        )

    def as_structural(self, source: StructuralData) -> StructuralData:
        """Complete targets as the data of an ``(m+z) x n`` matrix."""
        if self.mode != "complete":
            raise PrescribedDataError("only complete targets determine all four families")
        return StructuralData(
            source.m + self.z, source.n, source.rank + self.x,
            self.num, self.den, self.orders, self.cols, self.rows, source.field,
        )

    def validate(self, source: StructuralData) -> None:
        """Raise :class:`PrescribedDataError` if the target is malformed for ``source``."""
        fam = self.families
        problems = []
        if self.z < 0:
            problems.append("z must be non-negative")
        present = {
            "finite": self.num is not None,
            "orders": self.orders is not None,
            "first-order": self.orders is not None,
            "cols": self.cols is not None,
            "rows": self.rows is not None,
        }
        for f in ("finite", "cols", "rows"):
            if present[f] != (f in fam):
                problems.append(f"mode {self.mode} {'needs' if f in fam else 'does not take'} the {f} family")
        need_orders = "orders" in fam or "first-order" in fam
        if present["orders"] != need_orders:
            problems.append(f"mode {self.mode} {'needs' if need_orders else 'does not take'} orders")
        if problems:
            raise PrescribedDataError("; ".join(problems))
        rank = source.rank + self.x
        if self.num is not None:
            if len(self.num) != rank or len(self.den) != rank:
                problems.append(f"expected {rank} invariant rational functions, got {len(self.num)}")
            elif any(not e.is_monic() for e in self.num) or any(not d.is_monic() for d in self.den):
                problems.append("numerators and denominators must be monic")
            else:
                if any(not a.divides(b) for a, b in zip(self.num, self.num[1:])):
                    problems.append("numerators do not form a divisibility chain")
                if any(not b.divides(a) for a, b in zip(self.den, self.den[1:])):
                    problems.append("denominators do not form a divisibility chain")
                if any(not poly_gcd(e, d).is_one() for e, d in zip(self.num, self.den)):
                    problems.append("invariant rational functions are not reduced")
        if self.orders is not None:
            want = rank if "orders" in fam else min(rank, 1)
            if len(self.orders) != want:
                problems.append(f"expected {want} orders at infinity, got {len(self.orders)}")
            elif any(a > b for a, b in zip(self.orders, self.orders[1:])):
                problems.append("orders at infinity must be non-decreasing")
        for name, seq, want in (
            ("column", self.cols, source.n - rank),
            ("row", self.rows, source.m + self.z - rank),
        ):
            if seq is None:
                continue
            if len(seq) != want and want >= 0:
                problems.append(f"expected {want} {name} minimal indices, got {len(seq)}")
            if any(a < b for a, b in zip(seq, seq[1:])) or any(v < 0 for v in seq):
                problems.append(f"{name} minimal indices must be a partition")
        if problems:
            raise PrescribedDataError("; ".join(problems))


@dataclass(frozen=True)
class Condition:
    id: str
    description: str
    holds: bool
    lhs: object = None
    rhs: object = None


@dataclass(frozen=True)
class SeqBuilderOutput:
    a: tuple
    b: tuple
    a_prefix: tuple = ()
    b_prefix: tuple = ()


@dataclass(frozen=True)
class Verdict:
    """Outcome of a feasibility check with every evaluated condition."""

    status: str
    mode: str
    ring: str
    conditions: tuple
    sequences: dict = field(default_factory=dict, compare=False)

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    @property
    def failed(self) -> tuple:
        return tuple(c for c in self.conditions if not c.holds)

    def explain(self) -> str:
        lines = [f"{self.mode} ({self.ring}): {self.status}"]
        for c in self.conditions:
            mark = "ok  " if c.holds else "FAIL"
            sides = ""
            if c.lhs is not None or c.rhs is not None:
                sides = f"  [{_fmt(c.lhs)} vs {_fmt(c.rhs)}]"
            lines.append(f"  {mark} {c.id}: {c.description}{sides}")
        for name, seq in self.sequences.items():
            lines.append(f"  {name} = {list(seq)}")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_fmt(e) for e in v) + ")"
    if isinstance(v, Poly):
        return v.format()
    return str(v)


def make_verdict(mode: str, ring: str, conditions, sequences=None, hypothesis: bool = False) -> Verdict:
    conditions = tuple(conditions)
    if hypothesis:
        status = HYPOTHESIS
    else:
        status = FEASIBLE if all(c.holds for c in conditions) else INFEASIBLE
    return Verdict(status, mode, ring, conditions, dict(sequences or {}))

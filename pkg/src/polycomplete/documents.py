"""JSON documents for matrices, targets, structural data and verdicts.

Coefficients travel as strings, lowest degree first, so rationals stay
exact.  Polynomials may also be written as expressions such as
``"s^2 + 3/2*s - 1"``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .completion.prescribed import MODES, Condition, PrescribedData, Verdict
from .field_poly import QQ, NEG_INF, Poly, RatFunc, field_from_descriptor
from .polymatrix import PolyMatrix, RatMatrix
from .structure import StructuralData

VERDICT_SCHEMA = "polycomplete.verdict/1"
STRUCTURE_SCHEMA = "polycomplete.structure/1"
REPORT_SCHEMA = "polycomplete.oracle-report/1"


class DocumentError(ValueError):
    """Malformed document; ``where`` locates the problem when known."""

    def __init__(self, msg, where=None):
        super().__init__(f"{where}: {msg}" if where else msg)
        self.where = where


def load_json(text: str, name: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"{name}:{exc.lineno}:{exc.colno}") from None


def read_document(path: str):
    with open(path, encoding="utf-8") as fh:
        return load_json(fh.read(), path)


# -- polynomials -----------------------------------------------------------------

_MONO = re.compile(r"^(?:(\d+(?:/\d+)?)\s*\*?\s*)?(s(?:\s*\^\s*(\d+))?)?$")


def parse_poly_expr(text: str, field=QQ) -> Poly:
    """Parse ``"s^2 - 2*s + 1/3"`` style expressions in the variable ``s``."""
    body = text.replace(" ", "")
    if not body:
        raise DocumentError(f"empty polynomial {text!r}")
    if body[0] not in "+-":
        body = "+" + body
    out = Poly.zero(field)
    pos = 0
    for m in re.finditer(r"([+-])([^+-]+)", body):
        if m.start() != pos:
            raise DocumentError(f"cannot parse {text!r} near column {pos + 1}")
        pos = m.end()
        mono = _MONO.match(m.group(2))
        if mono is None or (mono.group(1) is None and mono.group(2) is None):
            raise DocumentError(f"cannot parse term {m.group(2)!r} in {text!r}")
        coef = Fraction(mono.group(1)) if mono.group(1) else Fraction(1)
        k = 0 if mono.group(2) is None else int(mono.group(3) or 1)
        if m.group(1) == "-":
            coef = -coef
        c = field(coef)
        out = out + Poly.monomial(k, field, c)
    if pos != len(body):
        raise DocumentError(f"cannot parse {text!r} near column {pos + 1}")
    return out


def parse_poly(obj, field, where=None) -> Poly:
    """A coefficient list (low degree first) or an expression string."""
    try:
        if isinstance(obj, str):
            return parse_poly_expr(obj, field)
        if isinstance(obj, (int,)) and not isinstance(obj, bool):
            return Poly.constant(obj, field)
        if isinstance(obj, list):
            return Poly([field(_coef(c)) for c in obj], field)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc), where) from None
    raise DocumentError(f"expected a coefficient list or expression, got {obj!r}", where)


def _coef(c):
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, bool) or not isinstance(c, int):
        raise ValueError(f"coefficient {c!r} must be a string or an integer")
    return c


def poly_doc(p: Poly) -> list:
    return p.to_strings()


def parse_field(doc, where="field"):
    try:
        return field_from_descriptor(doc.get("field", "Q") if isinstance(doc, dict) else doc)
    except (ValueError, TypeError) as exc:
        raise DocumentError(str(exc), where) from None


# -- matrices ---------------------------------------------------------------------

def matrix_to_doc(M) -> dict:
    rational = isinstance(M, RatMatrix) and not M.is_polynomial()
    entries = []
    for row in M.entries:
        out = []
        for e in row:
            if rational:
                out.append({"num": e.num.to_strings(), "den": e.den.to_strings()})
            else:
                out.append((e.num if isinstance(e, RatFunc) else e).to_strings())
        entries.append(out)
    return {"field": M.field.descriptor(), "rows": M.rows, "cols": M.cols, "entries": entries}


def matrix_from_doc(doc):
    """A :class:`PolyMatrix` when every entry is polynomial, else a :class:`RatMatrix`."""
    if not isinstance(doc, dict) or "entries" not in doc:
        raise DocumentError("matrix document needs an 'entries' array")
    field = parse_field(doc)
    rows = doc["entries"]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise DocumentError("'entries' must be a list of rows", "entries")
    m = doc.get("rows", len(rows))
    n = doc.get("cols", len(rows[0]) if rows else 0)
    if len(rows) != m or any(len(r) != n for r in rows):
        raise DocumentError(f"entries do not form a {m}x{n} array", "entries")
    rational = False
    cells = []
    for i, row in enumerate(rows):
        out = []
        for j, e in enumerate(row):
            where = f"entries[{i}][{j}]"
            if isinstance(e, dict):
                num = parse_poly(e.get("num", ["0"]), field, where + ".num")
                den = parse_poly(e.get("den", ["1"]), field, where + ".den")
                if den.is_zero():
                    raise DocumentError("zero denominator", where)
                f = RatFunc(num, den)
                rational = rational or not f.is_polynomial()
                out.append(f)
            else:
                out.append(RatFunc.from_poly(parse_poly(e, field, where)))
        cells.append(out)
    R = RatMatrix(cells, field, cols=n)
    return R if rational else R.to_poly()


# -- structural data -----------------------------------------------------------------

def _int_list(v, where):
    if not isinstance(v, list) or any(isinstance(e, bool) or not isinstance(e, int) for e in v):
        raise DocumentError("expected a list of integers", where)
    return tuple(v)


def structure_to_doc(data: StructuralData) -> dict:
    field = data.field or QQ
    deg = data.degree
    return {
        "schema": STRUCTURE_SCHEMA,
        "field": field.descriptor(),
        "m": data.m,
        "n": data.n,
        "rank": data.rank,
        "degree": None if deg == NEG_INF else deg,
        "eta": [e.format() for e in data.num],
        "phi": [f.format() for f in data.den],
        "num": [e.to_strings() for e in data.num],
        "den": [f.to_strings() for f in data.den],
        "orders": list(data.orders),
        "cols": list(data.cols),
        "rows": list(data.rows),
    }


def structure_from_doc(doc) -> StructuralData:
    field = parse_field(doc)
    num = tuple(parse_poly(e, field, f"num[{i}]") for i, e in enumerate(doc.get("num", doc.get("eta", []))))
    den_src = doc.get("den", doc.get("phi"))
    den = (
        tuple(parse_poly(e, field, f"den[{i}]") for i, e in enumerate(den_src))
        if den_src is not None else (Poly.one(field),) * len(num)
    )
    try:
        return StructuralData(
            doc["m"], doc["n"], doc.get("rank", len(num)), num, den,
            _int_list(doc["orders"], "orders"), _int_list(doc["cols"], "cols"), _int_list(doc["rows"], "rows"),
            field,
        )
    except KeyError as exc:
        raise DocumentError(f"missing key {exc.args[0]!r}") from None


# -- targets ----------------------------------------------------------------------------

def target_from_doc(doc, field) -> PrescribedData:
    """Targets name their families: ``num``/``eps``, ``den``/``psi``, ``orders`` (or
    ``first_order``), ``cols``, ``rows``."""
    if not isinstance(doc, dict):
        raise DocumentError("target document must be an object")
    mode = doc.get("mode")
    if mode not in MODES:
        raise DocumentError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}", "mode")
    if "field" in doc:
        field = parse_field(doc)
    try:
        z, x = int(doc["z"]), int(doc["x"])
    except (KeyError, TypeError, ValueError):
        raise DocumentError("target needs integer 'z' and 'x'") from None
    num = doc.get("num", doc.get("eps"))
    den = doc.get("den", doc.get("psi"))
    num = None if num is None else tuple(parse_poly(e, field, f"num[{i}]") for i, e in enumerate(num))
    den = None if den is None else tuple(parse_poly(e, field, f"den[{i}]") for i, e in enumerate(den))
    if num is not None and den is None:
        den = (Poly.one(field),) * len(num)
    orders = doc.get("orders")
    if "first_order" in doc:
        fo = doc["first_order"]
        orders = [] if fo is None else [fo]
    orders = None if orders is None else _int_list(orders, "orders")
    cols = None if doc.get("cols") is None else _int_list(doc["cols"], "cols")
    rows = None if doc.get("rows") is None else _int_list(doc["rows"], "rows")
    return PrescribedData(mode, z, x, num=num, den=den, orders=orders, cols=cols, rows=rows)


def target_to_doc(t: PrescribedData) -> dict:
    out = {"mode": t.mode, "z": t.z, "x": t.x}
    if t.num is not None:
        out["num"] = [e.to_strings() for e in t.num]
        out["den"] = [d.to_strings() for d in t.den]
    if t.orders is not None:
        if t.mode == "fin-first-order":
            out["first_order"] = t.orders[0] if t.orders else None
        else:
            out["orders"] = list(t.orders)
    if t.cols is not None:
        out["cols"] = list(t.cols)
    if t.rows is not None:
        out["rows"] = list(t.rows)
    return out


# -- verdicts -----------------------------------------------------------------------------

def _side(v):
    if isinstance(v, Poly):
        return v.format()
    if isinstance(v, tuple):
        return [_side(e) for e in v]
    if isinstance(v, float):  # the +-inf boundary values
        return str(v)
    return v


def verdict_to_doc(v: Verdict) -> dict:
    return {
        "schema": VERDICT_SCHEMA,
        "mode": v.mode,
        "ring": v.ring,
        "status": v.status,
        "feasible": v.feasible,
        "conditions": [
            {"id": c.id, "description": c.description, "holds": c.holds, "lhs": _side(c.lhs), "rhs": _side(c.rhs)}
            for c in v.conditions
        ],
        "sequences": {k: list(s) for k, s in v.sequences.items()},
    }


def _unside(v):
    return tuple(_unside(e) for e in v) if isinstance(v, list) else v


def verdict_from_doc(doc) -> Verdict:
    if doc.get("schema") != VERDICT_SCHEMA:
        raise DocumentError(f"unsupported verdict schema {doc.get('schema')!r}", "schema")
    conds = tuple(
        Condition(c["id"], c["description"], c["holds"], _unside(c.get("lhs")), _unside(c.get("rhs")))
        for c in doc["conditions"]
    )
    seqs = {k: tuple(s) for k, s in doc.get("sequences", {}).items()}
    return Verdict(doc["status"], doc["mode"], doc["ring"], conds, seqs)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)

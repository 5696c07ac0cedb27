"""Majorization and generalized majorization of integer sequences.

Indices are 1-based throughout, as in the usual statements.  Positions
outside a sequence are read through total accessors: a non-increasing
sequence is ``+inf`` before its first entry and ``-inf`` after its last.
"""
from __future__ import annotations

import math
from itertools import accumulate
from typing import Iterable

POS = math.inf
NEG = -math.inf


class IntSeq(tuple):
    """Non-increasing finite integer sequence with extended 1-based access."""

    def __new__(cls, items: Iterable[int] = (), *, check: bool = True):
        self = super().__new__(cls, (int(v) for v in items))
        if check and any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"sequence is not non-increasing: {tuple(self)}")
        return self

    def at(self, i: int):
        """``a_i`` with ``a_i = +inf`` for ``i < 1`` and ``-inf`` for ``i > len``."""
        if i < 1:
            return POS
        if i > len(self):
            return NEG
        return self[i - 1]

    def prefix(self, k: int) -> int:
        """``a_1 + ... + a_k`` (zero for ``k <= 0``)."""
        if k > len(self):
            raise IndexError(f"prefix of length {k} on a sequence of length {len(self)}")
        return sum(self[: max(k, 0)])

    def positive_count(self) -> int:
        """Number of strictly positive entries (``eta`` in ``u_1 >= .. >= u_eta > 0``)."""
        return sum(1 for v in self if v > 0)

    def __repr__(self):
        return f"IntSeq({list(self)})"


def positive_count(seq) -> int:
    return sum(1 for v in seq if v > 0)


def prefix_sums(seq) -> list[int]:
    return list(accumulate(seq))


def majorize(c, a) -> bool:
    """``c < a``: prefix sums of ``c`` bounded by those of ``a``, equal totals."""
    c, a = list(c), list(a)
    if len(c) != len(a):
        raise ValueError(f"majorization needs equal lengths, got {len(c)} and {len(a)}")
    if sum(c) != sum(a):
        return False
    sc = sa = 0
    for ci, ai in zip(c[:-1], a[:-1]):
        sc += ci
        sa += ai
        if sc > sa:
            return False
    return True


def h_index(c, d, j: int) -> int:
    """``h_j = min{i : d_{i-j+1} < c_i}`` with ``d`` extended by ``-inf``."""
    c, d = IntSeq(c, check=False), IntSeq(d, check=False)
    x = len(c) - len(d)
    if not 1 <= j <= x:
        raise ValueError(f"j={j} outside 1..{x}")
    for i in range(1, len(c) + 1):
        if d.at(i - j + 1) < c[i - 1]:
            return i
    raise AssertionError("unreachable: d is -inf past its end")


def gen_majorize_detail(c, d, a) -> list[tuple[str, bool, object, object]]:
    """The three defining conditions of ``c <' (d, a)``, each with both sides.

    Returns ``(name, holds, lhs, rhs)`` tuples; the second condition appears
    once per ``j`` as ``'gmaj2[j]'``.
    """
    c, d, a = list(c), list(d), list(a)
    q, x = len(c), len(a)
    if len(d) != q - x:
        raise ValueError(f"length mismatch: len(c)={q}, len(d)={len(d)}, len(a)={x}")
    out = []
    bad = [(i + 1, d[i], c[i + x]) for i in range(q - x) if d[i] < c[i + x]]
    out.append(("gmaj1", not bad, bad[0][1] if bad else None, bad[0][2] if bad else None))
    for j in range(1, x + 1):
        h = h_index(c, d, j)
        lhs = sum(c[:h]) - sum(d[: max(h - j, 0)])
        rhs = sum(a[:j])
        out.append((f"gmaj2[{j}]", lhs <= rhs, lhs, rhs))
    out.append(("gmaj3", sum(c) == sum(d) + sum(a), sum(c), sum(d) + sum(a)))
    return out


def gen_majorize(c, d, a) -> bool:
    """``c <' (d, a)``, the generalized majorization."""
    return all(item[1] for item in gen_majorize_detail(c, d, a))


def ell_index(c, a) -> int:
    """``min{j >= 1 : c_1+..+c_j > a_1+..+a_j}`` over ``1 <= j <= len(a)``; ``len(a)+1`` if none."""
    sc = sa = 0
    for j, (ci, ai) in enumerate(zip(c, a), start=1):
        sc += ci
        sa += ai
        if sc > sa:
            return j
    return len(a) + 1


def partitions(total: int, length: int, largest: int | None = None):
    """All non-increasing non-negative sequences of the given length and sum."""
    if largest is None:
        largest = total
    if length == 0:
        if total == 0:
            yield ()
        return
    if total < 0:
        return
    for first in range(min(total, largest), -1, -1):
        if first * length < total:
            break
        for rest in partitions(total - first, length - 1, first):
            yield (first,) + rest

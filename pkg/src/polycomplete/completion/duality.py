"""Column completion by transposition.

Adding columns to ``M`` is adding rows to ``M^T``: the source is transposed
(column and row indices swap) and the target's column and row families swap
too, so a target prescribing column indices of ``[M  W]`` prescribes row
indices of ``[M^T; W^T]``.
"""
from __future__ import annotations

from ..structure import StructuralData
from .predicates import ROW_PREDICATES
from .prescribed import PrescribedData, Verdict

# prescribing the columns of [M W] is prescribing the rows of its transpose
MODE_UNDER_TRANSPOSE = {
    "complete": "complete",
    "fin-inf-col": "fin-inf-row",
    "fin-inf-row": "fin-inf-col",
    "fin-inf": "fin-inf",
    "inf": "inf",
    "fin": "fin",
    "fin-first-order": "fin-first-order",
}


def transpose_target(target: PrescribedData) -> PrescribedData:
    return PrescribedData(
        MODE_UNDER_TRANSPOSE[target.mode], target.z, target.x,
        num=target.num, den=target.den, orders=target.orders,
        cols=target.rows, rows=target.cols,
    )


def column_completion(source: StructuralData, target: PrescribedData, ring: str = "polynomial") -> Verdict:
    """Whether ``z`` columns can be appended to a matrix with ``source`` data to reach ``target``.

    ``target.cols`` and ``target.rows`` refer to the ``m x (n+z)`` result.
    """
    t = transpose_target(target)
    return ROW_PREDICATES[t.mode](source.transpose(), t, ring)


def _wrap(mode):
    def wrapper(source, target, ring="polynomial" if mode in ("complete", "inf", "fin") else "rational"):
        if target.mode != mode:
            raise ValueError(f"expected a {mode} target, got {target.mode}")
        return column_completion(source, target, ring)

    wrapper.__name__ = mode.replace("-", "_") + "_column_completion"
    wrapper.__doc__ = f"Column version of the {mode} row predicate (via transposition)."
    return wrapper


complete_column_completion = _wrap("complete")
fin_inf_col_column_completion = _wrap("fin-inf-col")
fin_inf_row_column_completion = _wrap("fin-inf-row")
fin_inf_column_completion = _wrap("fin-inf")
inf_only_column_completion = _wrap("inf")
fin_only_column_completion = _wrap("fin")
fin_first_order_column_completion = _wrap("fin-first-order")

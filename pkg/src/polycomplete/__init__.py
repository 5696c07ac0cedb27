"""Exact row and column completion of polynomial and rational matrices."""
from .field_poly import GF, NEG_INF, POS_INF, QQ, Poly, RatFunc, poly_gcd, poly_lcm
from .polymatrix import Pencil, PolyMatrix, RatMatrix, companion_form
from .structure import (
    HomogeneousFactor,
    StructuralData,
    complete_structural_data,
    homogeneous_invariant_factors,
    minimal_indices,
    orders_at_infinity,
    smith_form,
    smith_mcmillan,
)

__version__ = "0.1.0"

"""Feasibility predicates for row and column completion."""
from .algebra import delta, exists_with_data, interlace_finite, lcm_scaled_identity_check
from .duality import column_completion, transpose_target
from .pencil import homogeneous_chain, pencil_row_completion
from .predicates import (
    ROW_PREDICATES,
    check,
    complete_row_completion,
    fin_first_order_completion,
    fin_inf_col_completion,
    fin_inf_completion,
    fin_inf_row_completion,
    fin_only_completion,
    inf_only_completion,
    scale_pair,
    scaling_polynomial,
)
from .prescribed import (
    FEASIBLE,
    HYPOTHESIS,
    INFEASIBLE,
    MODES,
    Condition,
    PrescribedData,
    PrescribedDataError,
    SeqBuilderOutput,
    Verdict,
)
from .sequences import build_sequences, polynomial_sequences

"""Exact subresultants of several univariate polynomials and verification
of the generalized Habicht identity."""

from .detpoly import (
    CoeffMatrix,
    ShapeError,
    build_cm,
    check_block_lemma,
    det_bareiss,
    det_cofactor,
    dp_linear_combination,
    dp_list,
    dp_matrix,
    pcdp_list,
    pcdp_matrix,
)
from .poly import Poly, ZeroPolynomialError, coeff_at, poly_add, poly_mul, poly_shift
from .reduction import evaluate_plan, execute_plan, plan_reduction, render_plan
from .subresultant import (
    PolySystem,
    SubresultantValue,
    col_count,
    delta0,
    enumerate_index_set,
    ideal_membership_decompose,
    subres_two,
    subresultant,
)
from .theorem import (
    HabichtParams,
    VerificationReport,
    derive_params,
    iter_params,
    lhs,
    rhs,
    verify_identity,
    verify_induction_equations,
)

__version__ = "0.1.0"

"""Character-degree sums of finite classical groups.

Exact closed-form polynomials in q for sums of character degrees of
GL, U, Sp, GSp and the orthogonal and similitude-orthogonal families,
together with a brute-force census over small prime fields that verifies
them (via Frobenius-Schur involution counts), the bound checks they feed,
and exhaustive scans of the auxiliary inequality lemmas.
"""
from .bounds import (BOUNDS_CSV_HEADER, SCAN_LEMMAS, BoundsRow, BoundValues,
                     ScanResult, bound_values, bounds_table, check_bounds,
                     scan_inequalities)
from .census import (CensusQuery, CensusReport, ClaimResult, InvolutionBucket,
                     VerificationRecord, enumerate_group, expected_buckets,
                     run_census, verify_counts, wall_class_size)
from .errors import DomainError, EnvelopeError
from .fp import FpElement, MatrixFp
from .groups import (Family, FormSpec, GroupDescriptor, GroupSpec, descriptor,
                     group_order_formula, is_member, matrix_dim, parse_family,
                     standard_form)
from .qpoly import (QPoly, gaussian_binomial_exact, gaussian_binomial_poly,
                    qpoly_eval, render_qpoly)
from .sums import (SumKind, SumResult, degree_sum, degree_sum_poly,
                   kernel_even, kernel_gl, kernel_odd, parse_sum_kind)

__version__ = "0.1.0"

__all__ = [
    "BOUNDS_CSV_HEADER", "SCAN_LEMMAS", "BoundsRow", "BoundValues",
    "CensusQuery", "CensusReport", "ClaimResult", "DomainError",
    "EnvelopeError", "Family", "FormSpec", "FpElement", "GroupDescriptor",
    "GroupSpec", "InvolutionBucket", "MatrixFp", "QPoly", "ScanResult",
    "SumKind", "SumResult", "VerificationRecord", "bound_values",
    "bounds_table", "check_bounds", "degree_sum", "degree_sum_poly",
    "descriptor", "enumerate_group", "expected_buckets",
    "gaussian_binomial_exact", "gaussian_binomial_poly",
    "group_order_formula", "is_member", "kernel_even", "kernel_gl",
    "kernel_odd", "matrix_dim", "parse_family", "parse_sum_kind",
    "qpoly_eval", "render_qpoly", "run_census", "scan_inequalities",
    "standard_form", "verify_counts", "wall_class_size",
]

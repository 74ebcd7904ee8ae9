"""nevlab: exact graded-algebra filtrations and numerical Nevanlinna
functionals for desk-scale second-main-theorem checks."""

from .errors import (ConvergenceError, DegenerateCurveError,
                     GeneralPositionError, InhomogeneousFormError,
                     InternalCheckError, NevlabError, ParseError,
                     PreconditionError, QuadratureError,
                     RadiusPerturbedWarning, WindingError)
from .expressions import Curve, ExpPoly, curve_compose, wronskian
from .filtration import (Filtration, FiltrationBasisElement, FiltrationLevel,
                         RatioBoundReport, TruncationReport, choose_alpha,
                         delta_lower_bound, filtration_basis,
                         filtration_levels, level_dim, multi_indices,
                         quotient_dims, ratio_bounds, truncation_cap,
                         truncation_report, weighted_quotient_sum)
from .graded import (GradedPieceBasis, NullstellensatzCertificate,
                     general_position_witness, hilbert_quotient,
                     ideal_graded_dim, is_general_position,
                     is_zero_dimensional, macaulay_degree,
                     nullstellensatz_certificate)
from .harness import (SmtReport, SmtReportRow, SuiteLimits, SuiteResult,
                      TheoremRReport, TheoremRRow, WronskianOrderReport,
                      lemma_suite, random_zero_dimensional_system,
                      run_smt_scenario, theorem_r_check,
                      wronskian_order_check)
from .nevanlinna import (NevanlinnaRow, characteristic, circle_average,
                         counting, counting_value, fmt_residual,
                         nevanlinna_rows, proximity, zero_count)
from .parsing import parse_expr, parse_form, parse_inputs
from .polynomials import (HomogeneousPoly, Monomial, monomial_basis,
                          monomial_count)
from .rationals import GaussianRational, gauss, parse_rational, rational
from .scenario import Scenario, TargetSpec, load_scenario, scenario_from_dict
from .zeros import ZeroRecord, locate_zeros

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

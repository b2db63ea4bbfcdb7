"""Gamma, zeta and beta functions attached to polynomials positive on (0, inf)."""
from .bsato import BsatoResult, OperatorSpec, bsato_monomial, bsato_quadratic, c_recurrence
from .errors import (ConvergenceError, DomainError, EvaluationOverflow, FGammaError, PoleError,
                     SingularPointError)
from .gammaf import (GammaDomain, asymptotic_approx, gamma_f, gamma_f_quadrature,
                     gamma_tk_closed, gamma_tk_continued, gamma_tk_via_kgamma,
                     gauss_limit_product, k_gamma, kgamma_shift_rhs, quarter_reflection_rhs,
                     quarter_reflection_rhs_corrected, reflection_rhs, weierstrass_reciprocal)
from .poly import RealPolynomial, SPolynomial
from .quad import QuadratureConfig, QuadratureResult, TailMajorant, integrate_exp_weighted
from .special import ComplexEval
from .verify import (IDENTITIES, IdentityReport, check_identity, emit_reports, load_reports,
                     quadratic_corrected_sides, quadratic_gap, quadratic_printed_sides)
from .zetabeta import beta_f, beta_tk_relation_rhs, zeta_f_series, zeta_tk

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

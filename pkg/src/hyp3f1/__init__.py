"""Exact and asymptotic toolkit for a terminating 3F1 polynomial
family, the critical curve that splits its growth regimes, and the
finite Fourier transform identities that tie the two together."""

from .arith import (
    BigComplex,
    GaussianRational,
    exp_unit,
    gamma_half_shift,
    gamma_one_third,
    gamma_pos_int,
    gen_binomial,
    parse_rational,
    pochhammer,
)
from .asym import (
    AsymptoticResult,
    PhaseData,
    RegimeError,
    endpoint_approx,
    exterior_approx,
    interior_approx,
    oscillation_phase,
    phase_data,
    phase_minus,
    phase_plus,
    segment_approx,
    stationary_phase_minus,
    stationary_phase_minus_endpoint,
)
from .geometry import (
    CurveTrace,
    CurveTraceError,
    Regime,
    RegimeTag,
    classify,
    growth_factor,
    joukowsky_inverse,
    real_axis_crossing,
    trace_curve,
)
from .hyper import (
    CancellationReport,
    PolyParams,
    PrecisionCeilingError,
    Terminating3F1Spec,
    chebyshev_t,
    conjugate_pair_sum,
    family_exact,
    family_float,
    family_spec,
    jacobi_coefficients,
    jacobi_poly,
    segment_target,
    terminating_3f1_exact,
    terminating_3f1_float,
    terminating_3f1_float_report,
)
from .quad import (
    PhaseSplitResult,
    QuadratureConfig,
    QuadratureConvergenceError,
    QuadratureResult,
    chebyshev_fourier,
    jacobi_fourier,
    jacobi_fourier_closed_form,
    phase_split_integrals,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticResult",
    "BigComplex",
    "CancellationReport",
    "CurveTrace",
    "CurveTraceError",
    "GaussianRational",
    "PhaseData",
    "PhaseSplitResult",
    "PolyParams",
    "PrecisionCeilingError",
    "QuadratureConfig",
    "QuadratureConvergenceError",
    "QuadratureResult",
    "Regime",
    "RegimeError",
    "RegimeTag",
    "Terminating3F1Spec",
    "chebyshev_fourier",
    "chebyshev_t",
    "classify",
    "conjugate_pair_sum",
    "endpoint_approx",
    "exp_unit",
    "exterior_approx",
    "family_exact",
    "family_float",
    "family_spec",
    "gamma_half_shift",
    "gamma_one_third",
    "gamma_pos_int",
    "gen_binomial",
    "growth_factor",
    "interior_approx",
    "jacobi_coefficients",
    "jacobi_fourier",
    "jacobi_fourier_closed_form",
    "jacobi_poly",
    "joukowsky_inverse",
    "oscillation_phase",
    "parse_rational",
    "phase_data",
    "phase_minus",
    "phase_plus",
    "phase_split_integrals",
    "pochhammer",
    "real_axis_crossing",
    "segment_approx",
    "segment_target",
    "stationary_phase_minus",
    "stationary_phase_minus_endpoint",
    "terminating_3f1_exact",
    "terminating_3f1_float",
    "terminating_3f1_float_report",
    "trace_curve",
]

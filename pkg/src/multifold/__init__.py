"""multifold: exact and leading-order multifold dynamics of the inverted
harmonic oscillator on the Gaussian covariance-matrix formalism.

Everything computes on a high-precision scalar backend (compiled gmpy2 when
available, pure-Python mpmath otherwise); see `multifold.hp`.
"""

from .version import __version__
from . import hp
from .errors import (
    ComplexityBudget,
    DegenerateSpectrum,
    DomainError,
    MultifoldError,
    PrecisionExhausted,
    RegimeWarning,
    UnknownFigure,
)
from .linalg import Mat2
from .gaussian import (
    CovMatrix,
    OscillatorParams,
    Symplectic,
    complexity,
    conjugate,
    harmonic_reference_covariance,
    inner_product,
    neg_log_inner,
    reference_covariance,
    relative_covariance,
    rho_exact,
)
from .evolution import (
    Generator,
    exp_generator,
    harmonic_generator,
    harmonic_propagator,
    inverted_generator,
    inverted_propagator,
    kick,
    kick_generator,
    perturbed_generator,
    perturbed_propagator,
)
from .states import (
    TimeFold,
    harmonic_precursor_covariance,
    harmonic_precursor_rho,
    loschmidt_covariance,
    loschmidt_symplectic,
    precursor_covariance,
    precursor_symplectic,
)
from .analytic import (
    AnalyticTerm,
    DominantTermResult,
    LeadingSum,
    SignPattern,
    alpha_coupling,
    dominant_term,
    fold_legs,
    kappa,
    loschmidt_terms,
    precursor_terms,
    rho_L_leading,
    rho_P_leading,
    scrambling_time,
    sign_patterns,
    switchback_complexity,
    total_folded_time,
)
from .experiments import (
    Grid,
    Row,
    Scenario,
    TimeExpr,
    csv_text,
    figure,
    figure_scenario,
    run_scenario,
    time_expr,
    write_csv,
)

__all__ = [
    "__version__",
    "hp",
    "MultifoldError", "DomainError", "DegenerateSpectrum", "ComplexityBudget",
    "PrecisionExhausted", "UnknownFigure", "RegimeWarning",
    "Mat2",
    "OscillatorParams", "CovMatrix", "Symplectic",
    "reference_covariance", "harmonic_reference_covariance", "conjugate",
    "relative_covariance", "rho_exact", "complexity", "inner_product",
    "neg_log_inner",
    "Generator", "exp_generator", "inverted_generator", "perturbed_generator",
    "harmonic_generator", "kick_generator", "inverted_propagator",
    "perturbed_propagator", "harmonic_propagator", "kick",
    "TimeFold", "loschmidt_covariance", "loschmidt_symplectic",
    "precursor_covariance", "precursor_symplectic",
    "harmonic_precursor_covariance", "harmonic_precursor_rho",
    "AnalyticTerm", "LeadingSum", "DominantTermResult", "SignPattern",
    "kappa", "sign_patterns", "alpha_coupling", "loschmidt_terms",
    "precursor_terms", "rho_L_leading", "rho_P_leading", "scrambling_time",
    "fold_legs", "total_folded_time", "dominant_term", "switchback_complexity",
    "Scenario", "Grid", "TimeExpr", "Row", "time_expr", "run_scenario",
    "figure", "figure_scenario", "write_csv", "csv_text",
]

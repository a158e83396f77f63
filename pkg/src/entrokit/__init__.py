"""entrokit: classical and renormalized Shannon entropies for discrete,
continuous and mixed probability laws."""

from .convergence import (
    ConvergenceTrace,
    trace_binomial,
    trace_discrete_uniform,
    trace_poisson,
)
from .entropy import (
    EntropyReport,
    H_tilde,
    binomial_H_asymptotic,
    catalog_closed_forms,
    differential_h,
    entropy_report,
    gamma_ratio,
    h_bar,
    h_hat,
    h_tilde,
    poisson_H_asymptotic,
    poisson_H_exact,
    shannon_H,
)
from .errors import (
    DegenerateLawError,
    EntrokitError,
    LawSpecError,
    MixtureStructureError,
    NoVarianceError,
    RootConvergenceError,
)
from .laws import (
    AffineLaw,
    Cauchy,
    DiscreteLaw,
    Exponential,
    Gamma,
    Gaussian,
    Laplace,
    MixtureLaw,
    Student,
    Uniform,
    affine,
    binomial,
    cdf,
    degenerate,
    discrete_uniform,
    explicit,
    law_label,
    mean,
    mixture,
    parse_law,
    pdf,
    poisson,
    scale_parameter,
    standardize,
    variance,
)
from .quantiles import (
    QuantileProfile,
    iqnr,
    iqrr,
    quantile,
    quantile_profile,
    rho_tilde,
    rho_tilde_mixture,
)
from .special import SpecialValue, special_value

__version__ = "0.1.0"

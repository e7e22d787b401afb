"""Information-weighted probability distributions.

Reweight any continuous law by the Shannon information of one of its tails
and get a new, heavier-tailed law with exact CDF/quantile structure:
``F_w(x) = h_side(F(x))`` for a fixed scalar transform ``h_side`` on (0, 1).
The package provides the base catalog, the weighting operator, summary
statistics, bivariate weighting, seeded sampling, tail diagnostics, and a CLI
that regenerates the reference tables.
"""

__version__ = "0.1.0"

from .catalog import (
    BaseDistribution,
    Cauchy,
    Exponential,
    Frechet,
    Gumbel,
    Kumaraswamy,
    Logistic,
    MaxwellBoltzmann,
    Normal,
    ParameterError,
    Pareto,
    Rayleigh,
    Support,
    Uniform,
    Weibull,
    parse_distribution,
    standard_catalog,
)
from .joint import (
    JointBase,
    JointWeighted,
    custom_joint,
    independence_additivity_check,
    joint_normalization,
    marginal,
    product_of_independents,
)
from .numerics import (
    UNDEFINED,
    BracketError,
    DivergenceError,
    IntegralResult,
    QuadratureConfig,
    RootConfig,
    Undefined,
    find_root,
    integrate,
    is_undefined,
)
from .sampling import ALGORITHM_ID, SampleStream, ks_statistic, sample, sample_from_uniforms
from .summaries import (
    MEDIAN_LEFT_FRACTION,
    Mode,
    SummaryReport,
    bowley,
    build_summary,
    cre,
    find_modes,
    igf_mean_shift,
    info_generating,
    kurtosis_kappa,
    mean_shift,
    moments,
    percentiles,
    raw_moment,
)
from .tails import (
    RVLimitResult,
    TailReport,
    arc_length,
    build_tail_report,
    exp_dominance_probe,
    heaviness_ratio,
    hill,
    rv_limit,
    survival_at_two_sided_crossing,
    tail_arc_length,
)
from .weighting import (
    CROSSING_FRACTIONS,
    Side,
    WeightedDistribution,
    crossing_points,
    cumulative_hazard,
    h_left,
    h_prime,
    h_right,
    h_two,
    invert_core,
    invert_core_array,
    ppf_u2tail,
    psi_u,
)

"""Summary statistics of base and weighted distributions.

Moments come from direct quadrature of x f and x^2 f.  Divergent moments are
detected by a polynomial tail-exponent pre-check (a density falling like
c x^{-(a+1)} has no finite moment of order >= a) backed by the quadrature
divergence signal, and are reported as the explicit :data:`UNDEFINED` value
rather than raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import BaseDistribution
from .numerics import (
    DEFAULT_QUADRATURE,
    UNDEFINED,
    QuadratureConfig,
    RootConfig,
    Undefined,
    find_root,
    integrate,
    is_undefined,
)
from .weighting import Side, WeightedDistribution, invert_core

Real = float  # readability alias for "float or UNDEFINED" unions below

_MODE_ROOT = RootConfig(x_tol=1e-13, f_tol=1e-13, max_iters=200)


@dataclass(frozen=True)
class Mode:
    """A local density maximum; boundary modes sit at finite support endpoints."""

    x: float
    boundary: bool = False


@dataclass(frozen=True)
class SummaryReport:
    mean: Real | Undefined
    variance: Real | Undefined
    modes: tuple[Mode, ...]
    q1: float
    q2: float
    q3: float
    p10: float
    p90: float
    bowley_b1: float
    kurtosis_kappa: float
    mean_shift: Real | Undefined
    cre: Real | Undefined

    def __post_init__(self):
        if not self.q1 <= self.q2 <= self.q3:
            raise ValueError("quartiles out of order")
        if not (self.p10 <= self.q1 and self.q3 <= self.p90):
            raise ValueError("deciles must bracket the quartiles")
        if not is_undefined(self.variance) and self.variance < 0:
            raise ValueError("negative variance")


def _tail_exponent(dist, upper: bool) -> float:
    """Estimated polynomial decay exponent a of the density tail (pdf ~ x^-(a+1)).

    Returns +inf for faster-than-polynomial tails.  The two probe points sit
    three decades apart, far enough out that slowly varying log factors bias
    the estimate downward, which is the conservative direction here.
    """
    q = dist.ppf(1.0 - 1e-6) if upper else dist.ppf(1e-6)
    if upper:
        x1 = max(q, 1.0)
    else:
        x1 = min(q, -1.0)
    x2 = 1e3 * x1
    f1, f2 = dist.pdf(x1), dist.pdf(x2)
    if f1 <= 0.0 or f2 <= 0.0:
        return math.inf
    slope = (math.log(f2) - math.log(f1)) / (math.log(abs(x2)) - math.log(abs(x1)))
    return -slope - 1.0


def _moment_integrand_diverges(dist, order: int) -> bool:
    sup = dist.support
    if not sup.bounded_above and _tail_exponent(dist, upper=True) <= order:
        return True
    if not sup.bounded_below and _tail_exponent(dist, upper=False) <= order:
        return True
    return False


def raw_moment(dist, order: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """E[X^order] by quadrature, or UNDEFINED when the integral diverges."""
    if _moment_integrand_diverges(dist, order):
        return Undefined("polynomial tail too heavy for this moment order")
    sup = dist.support
    result = integrate(lambda x: x**order * dist.pdf(x), sup.lower, sup.upper, cfg)
    if not result.converged:
        return Undefined("quadrature failed to converge")
    return result.value


def moments(dist, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """(mean, variance); each may be UNDEFINED (e.g. every Cauchy moment)."""
    mean = raw_moment(dist, 1, cfg)
    if is_undefined(mean):
        return mean, Undefined("no finite mean")
    m2 = raw_moment(dist, 2, cfg)
    if is_undefined(m2):
        return mean, m2
    return mean, m2 - mean * mean


def mean_shift(d: BaseDistribution, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """Leftward mean displacement under left weighting: -int F ln F dx >= 0."""
    sup = d.support
    if not sup.bounded_above and _tail_exponent(d, upper=True) <= 1:
        return Undefined("upper tail too heavy")
    if not sup.bounded_below and _tail_exponent(d, upper=False) <= 1:
        return Undefined("lower tail too heavy")

    def integrand(x: float) -> float:
        c = d.cdf(x)
        if c <= 0.0 or c >= 1.0:
            return 0.0
        lc = math.log(c) if c <= 0.5 else math.log1p(-d.sf(x))
        return -c * lc

    result = integrate(integrand, sup.lower, sup.upper, cfg)
    if not result.converged:
        return Undefined("quadrature failed to converge")
    return result.value


def cre(d: BaseDistribution, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """Cumulative residual entropy -int (1-F) ln(1-F) dx, the rightward mirror
    of :func:`mean_shift`."""
    sup = d.support
    if not sup.bounded_above and _tail_exponent(d, upper=True) <= 1:
        return Undefined("upper tail too heavy")
    if not sup.bounded_below and _tail_exponent(d, upper=False) <= 1:
        return Undefined("lower tail too heavy")

    def integrand(x: float) -> float:
        s = d.sf(x)
        if s <= 0.0 or s >= 1.0:
            return 0.0
        ls = math.log(s) if s <= 0.5 else math.log1p(-d.cdf(x))
        return -s * ls

    result = integrate(integrand, sup.lower, sup.upper, cfg)
    if not result.converged:
        return Undefined("quadrature failed to converge")
    return result.value


def _igf_integral(d: BaseDistribution, t: float, cfg: QuadratureConfig) -> float:
    sup = d.support
    return integrate(lambda x: d.cdf(x) ** t, sup.lower, sup.upper, cfg).value


def info_generating(d: BaseDistribution, t: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """Information generating integral I(t) = int F(x)^t dx for t >= 1.

    Finite only when the support is bounded above (otherwise the integrand
    tends to 1 and the integral diverges); such cases return UNDEFINED.
    """
    if t < 1.0:
        raise ValueError(f"t must be >= 1, got {t}")
    if not d.support.bounded_above:
        return Undefined("support unbounded above")
    return _igf_integral(d, t, cfg)


def igf_mean_shift(
    d: BaseDistribution,
    step: float = 1e-5,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
):
    """-dI/dt at t=1 by central difference; equals :func:`mean_shift`.

    The difference stencil evaluates the (perfectly integrable) integrand just
    below t=1 even though the public I(t) is restricted to t >= 1.
    """
    if not d.support.bounded_above:
        return Undefined("support unbounded above")
    return -(_igf_integral(d, 1.0 + step, cfg) - _igf_integral(d, 1.0 - step, cfg)) / (
        2.0 * step
    )


def find_modes(dist, grid_points: int = 2048) -> list[Mode]:
    """Local maxima of the density.

    Scans the derivative's sign over the central 99.9% probability region,
    polishes each bracketed + -> - change, and reports finite endpoints toward
    which the density increases as boundary modes (the density may diverge
    there; e.g. the left-weighted uniform at 0).
    """
    sup = dist.support
    lo = dist.ppf(0.0005)
    hi = dist.ppf(0.9995)
    xs = np.linspace(lo, hi, grid_points)
    ds = np.array([dist.pdf_prime(float(x)) for x in xs])

    modes: list[Mode] = []
    if sup.bounded_below and ds[0] < 0.0:
        modes.append(Mode(sup.lower, boundary=True))
    for i in range(len(xs) - 1):
        if ds[i] > 0.0 and ds[i + 1] < 0.0:
            root = find_root(dist.pdf_prime, float(xs[i]), float(xs[i + 1]), _MODE_ROOT)
            modes.append(Mode(root))
        elif ds[i] == 0.0 and (i == 0 or ds[i - 1] > 0.0) and ds[i + 1] < 0.0:
            modes.append(Mode(float(xs[i])))
    if sup.bounded_above and ds[-1] > 0.0:
        modes.append(Mode(sup.upper, boundary=True))
    return modes


def percentiles(dist, ps: list[float]) -> list[float]:
    """Quantiles at the given probability levels."""
    for p in ps:
        if not 0.0 < p < 1.0:
            raise ValueError(f"percentile levels must lie in (0, 1), got {p}")
    return [dist.ppf(p) for p in ps]


def bowley(dist) -> float:
    """Quartile skewness ((Q3-Q2) - (Q2-Q1)) / (Q3-Q1)."""
    q1, q2, q3 = percentiles(dist, [0.25, 0.5, 0.75])
    return ((q3 - q2) - (q2 - q1)) / (q3 - q1)


def kurtosis_kappa(dist) -> float:
    """Percentile kurtosis (Q3-Q1) / (2 (P90-P10)); 0.263 for the normal."""
    p10, q1, q3, p90 = percentiles(dist, [0.1, 0.25, 0.75, 0.9])
    return 0.5 * (q3 - q1) / (p90 - p10)


# base-CDF fraction at which every left-weighted law attains its median
MEDIAN_LEFT_FRACTION = invert_core(Side.LEFT, 0.5)


def build_summary(dist, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> SummaryReport:
    """Full summary bundle for a base or weighted distribution."""
    base = dist.base if isinstance(dist, WeightedDistribution) else dist
    mean, variance = moments(dist, cfg)
    p10, q1, q2, q3, p90 = percentiles(dist, [0.1, 0.25, 0.5, 0.75, 0.9])
    return SummaryReport(
        mean=mean,
        variance=variance,
        modes=tuple(find_modes(dist)),
        q1=q1,
        q2=q2,
        q3=q3,
        p10=p10,
        p90=p90,
        bowley_b1=((q3 - q2) - (q2 - q1)) / (q3 - q1),
        kurtosis_kappa=0.5 * (q3 - q1) / (p90 - p10),
        mean_shift=mean_shift(base, cfg),
        cre=cre(base, cfg),
    )

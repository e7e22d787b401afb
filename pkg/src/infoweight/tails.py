"""Tail diagnostics: heaviness ratios, exponential-dominance probes, regular
variation, Hill estimation, and arc-length tail measures.

Deep-tail survival values go through ``log_sf`` closed forms wherever the
catalog provides them, so ratios remain meaningful far beyond the range where
1 - cdf underflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    Undefined,
    is_undefined,
)
from .numerics import integrate as _integrate
from .weighting import Side, WeightedDistribution, crossing_points

Trend = str  # "diverging" | "vanishing" | "inconclusive"

_SLOPE_EPS = 1e-3
_LOG_SF_FLOOR = math.log(1e-300)


@dataclass(frozen=True)
class RVLimitResult:
    """Survival ratios sf(t x)/sf(x) along a grid plus their extrapolated limit."""

    t: float
    samples: tuple[tuple[float, float], ...]
    estimate: float | None
    truncated: bool


@dataclass(frozen=True)
class TailReport:
    side: str
    lambda_probe: tuple[tuple[float, Trend], ...]
    ratio_samples: tuple[tuple[float, float], ...]
    rv_index_estimate: float | None
    hill_estimate: tuple[float, int] | None
    arc_length_total: float | Undefined
    arc_length_tail: float | Undefined
    survival_at_crossing: float


def heaviness_ratio(w: WeightedDistribution, xs: list[float]) -> list[tuple[float, float]]:
    """Weighted-to-base tail mass ratio at each x.

    Right / two-sided weightings are compared on the upper tail
    (sf_w / sf_base); the left weighting on the lower tail (cdf_w / cdf_base).
    For the one-sided weightings the ratio equals 1 - ln(base tail mass), so it
    grows without bound toward the weighted tail.
    """
    out = []
    for x in xs:
        if w.side is Side.LEFT:
            out.append((x, w.cdf(x) / w.base.cdf(x)))
        else:
            out.append((x, w.sf(x) / w.base.sf(x)))
    return out


def _probe_grid(dist, n: int = 65) -> np.ndarray:
    """Default log-spaced abscissas pushing into the upper tail."""
    start = max(dist.ppf(0.9), 1e-3)
    return np.geomspace(start, 1e8, n)


def exp_dominance_probe(
    dist,
    lams: list[float],
    x_grid: np.ndarray | None = None,
) -> list[tuple[float, Trend]]:
    """Classify the trend of e^{lam x} sf(x) for each lam > 0.

    Fits the slope of the log of that product over the last decade of usable
    grid points; |slope| below 1e-3 is reported as inconclusive.  Heavy tails
    in the exponential-dominance sense show "diverging" for every lam.
    """
    xs = _probe_grid(dist) if x_grid is None else np.asarray(x_grid, dtype=float)
    logs = np.array([dist.log_sf(float(x)) for x in xs])
    usable = np.isfinite(logs) & (logs > _LOG_SF_FLOOR)
    results: list[tuple[float, Trend]] = []
    for lam in lams:
        if lam <= 0:
            raise ValueError(f"lambda must be positive, got {lam}")
        x_ok = xs[usable]
        y = lam * x_ok + logs[usable]
        if len(x_ok) < 3:
            results.append((lam, "inconclusive"))
            continue
        last = x_ok >= x_ok[-1] / 10.0
        if last.sum() < 2:
            last = np.zeros_like(x_ok, dtype=bool)
            last[-2:] = True
        slope = np.polyfit(x_ok[last], y[last], 1)[0]
        if slope > _SLOPE_EPS:
            results.append((lam, "diverging"))
        elif slope < -_SLOPE_EPS:
            results.append((lam, "vanishing"))
        else:
            results.append((lam, "inconclusive"))
    return results


def rv_limit(dist, t: float, x_grid: np.ndarray | None = None) -> RVLimitResult:
    """Regular-variation probe: sf(t x)/sf(x) along the grid, extrapolated.

    For a tail with sf(x) = x^-a L(x) and slowly varying L the ratios converge
    to t^-a only logarithmically; the estimate removes the first-order
    correction by polynomial extrapolation in v = 1/(1 - log sf(x)).
    """
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    xs = _probe_grid(dist) if x_grid is None else np.asarray(x_grid, dtype=float)
    samples: list[tuple[float, float]] = []
    vs: list[float] = []
    truncated = False
    for x in xs:
        lx = dist.log_sf(float(x))
        ltx = dist.log_sf(float(t * x))
        if not (math.isfinite(lx) and math.isfinite(ltx)) or min(lx, ltx) < _LOG_SF_FLOOR:
            truncated = True
            continue
        samples.append((float(x), math.exp(ltx - lx)))
        vs.append(1.0 / (1.0 - lx))
    if not samples:
        return RVLimitResult(t, (), None, truncated)
    rs = np.array([r for _, r in samples])
    v = np.array(vs)
    if len(rs) >= 3:
        coeffs = np.polyfit(v[-3:], rs[-3:], 2)
        estimate = float(coeffs[-1])
    else:
        estimate = float(rs[-1])
    return RVLimitResult(t, tuple(samples), estimate, truncated)


def hill(samples, k: int) -> float:
    """Hill tail-index estimate from the top k order statistics."""
    xs = np.sort(np.asarray(samples, dtype=float))
    n = len(xs)
    if not 2 <= k < n:
        raise ValueError(f"k must satisfy 2 <= k < n, got k={k}, n={n}")
    if xs[0] <= 0.0:
        raise ValueError("Hill estimation requires strictly positive samples")
    top = np.log(xs[n - k :])
    return float(1.0 / (top.mean() - math.log(xs[n - k - 1])))


def arc_length(
    dist,
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
):
    """Length of the CDF curve over [a, b]: int sqrt(1 + pdf(x)^2) dx.

    The integrand is >= 1, so any infinite interval diverges and returns
    UNDEFINED.
    """
    sup = dist.support
    if not (sup.lower <= a < b <= sup.upper):
        raise ValueError(f"[{a}, {b}] must lie inside the support")
    if math.isinf(a) or math.isinf(b):
        return Undefined("arc length diverges on an unbounded interval")
    result = _integrate(lambda x: math.hypot(1.0, dist.pdf(x)), a, b, cfg)
    if not result.converged:
        return Undefined("quadrature failed to converge")
    return result.value


def tail_arc_length(
    dist,
    percentile: float,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
):
    """Arc length of the CDF curve beyond the given quantile."""
    if not 0.0 < percentile < 1.0:
        raise ValueError(f"percentile must lie in (0, 1), got {percentile}")
    upper = dist.support.upper
    if math.isinf(upper):
        return Undefined("arc length diverges on an unbounded interval")
    return arc_length(dist, dist.ppf(percentile), upper, cfg)


def survival_at_two_sided_crossing(dist) -> float:
    """Survival of ``dist`` at the upper density crossing of the two-sided pair.

    For a base law this is the tail area beyond the point where its two-sided
    weighting crosses it; for a weighted law, the (heavier) weighted tail area
    at the same kind of point.
    """
    if isinstance(dist, WeightedDistribution):
        base = dist.base
    else:
        base = dist
    x_star = crossing_points(WeightedDistribution(base, Side.TWO_SIDED))[-1]
    return dist.sf(x_star)


def rv_index_from_limits(results: list[RVLimitResult]) -> float | None:
    """Tail index implied by rv_limit estimates; None when they disagree."""
    indices = []
    for res in results:
        if res.estimate is None or res.estimate <= 0.0 or res.t == 1.0:
            return None
        idx = -math.log(res.estimate) / math.log(res.t)
        if not math.isfinite(idx) or idx <= 0.0:
            return None
        indices.append(idx)
    if not indices:
        return None
    mean = sum(indices) / len(indices)
    spread = max(abs(i - mean) for i in indices)
    if spread > 0.2 * mean:
        return None
    return mean


def build_tail_report(
    dist,
    lams: list[float],
    ts: list[float],
    percentile: float = 0.9,
    x_grid: np.ndarray | None = None,
    hill_samples: np.ndarray | None = None,
    hill_k: int | None = None,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> TailReport:
    """Assemble the full diagnostic bundle for one distribution."""
    xs = _probe_grid(dist) if x_grid is None else np.asarray(x_grid, dtype=float)
    probes = exp_dominance_probe(dist, lams, xs)
    if isinstance(dist, WeightedDistribution):
        ratio_xs = [dist.base.ppf(p) for p in (0.5, 0.75, 0.9, 0.95, 0.99)]
        ratios = tuple(heaviness_ratio(dist, ratio_xs))
    else:
        ratios = ()
    rv_results = [rv_limit(dist, t, xs) for t in ts]
    hill_est = None
    if hill_samples is not None and len(hill_samples) >= 10 and min(hill_samples) > 0:
        k = hill_k if hill_k is not None else max(2, len(hill_samples) // 100)
        hill_est = (hill(hill_samples, k), k)
    sup = dist.support
    if sup.bounded_below and sup.bounded_above:
        total = arc_length(dist, sup.lower, sup.upper, cfg)
        tail = tail_arc_length(dist, percentile, cfg)
    else:
        total = Undefined("arc length diverges on an unbounded interval")
        tail = Undefined("arc length diverges on an unbounded interval")
    return TailReport(
        side="right",
        lambda_probe=tuple(probes),
        ratio_samples=ratios,
        rv_index_estimate=rv_index_from_limits(rv_results),
        hill_estimate=hill_est,
        arc_length_total=total,
        arc_length_tail=tail,
        survival_at_crossing=survival_at_two_sided_crossing(dist),
    )

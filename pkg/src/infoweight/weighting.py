"""Information weighting of distributions.

A base density f with CDF F is reweighted by the Shannon self-information of
one of its tails:

    left       -f(x) ln F(x)
    right      -f(x) ln (1 - F(x))        (cumulative-hazard weighting)
    two-sided  -f(x)/2 ln (F(x) (1-F(x)))

Every weighted CDF is the composition ``h_side(F(x))`` of the base CDF with a
side-specific scalar transform on (0, 1); all quantiles, survivals and
crossing points below exploit that structure instead of per-family formulas.
The two-sided transform decomposes as ``h_two(u) = u + psi_u(u)`` with a
zero-mean compactly supported bump ``psi_u``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .catalog import BaseDistribution, Support
from .numerics import RootConfig, find_root


class Side(Enum):
    """Which tail's information weights the density."""

    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two"

    @classmethod
    def parse(cls, token: str) -> "Side":
        norm = token.strip().lower()
        aliases = {"two-sided": "two", "twosided": "two", "2tail": "two"}
        norm = aliases.get(norm, norm)
        for side in cls:
            if side.value == norm:
                return side
        raise ValueError(f"unknown weighting side {token!r} (use left/right/two)")


# ---------------------------------------------------------------------------
# scalar transforms on (0, 1) that generate every weighted CDF by composition
# ---------------------------------------------------------------------------


def h_left(u: float) -> float:
    """u (1 - ln u), with the u ln u -> 0 convention at the endpoints."""
    if u <= 0.0:
        return 0.0
    if u >= 1.0:
        return 1.0
    return u * (1.0 - math.log(u))


def h_right(u: float) -> float:
    """u + (1-u) ln(1-u)."""
    if u <= 0.0:
        return 0.0
    if u >= 1.0:
        return 1.0
    v = 1.0 - u
    return u + v * math.log(v)


def psi_u(x: float) -> float:
    """Zero-mean bump -x ln(x)/2 + (1-x) ln(1-x)/2 on [0, 1].

    Antisymmetric about 1/2; adding it to the identity yields :func:`h_two`.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"psi_u argument must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -0.5 * x * math.log(x) + 0.5 * (1.0 - x) * math.log1p(-x)


def h_two(u: float) -> float:
    """u - u ln(u)/2 + (1-u) ln(1-u)/2, i.e. u + psi_u(u)."""
    if u <= 0.0:
        return 0.0
    if u >= 1.0:
        return 1.0
    return u + psi_u(u)


def h_prime(side: Side, u: float) -> float:
    """Derivative of the side transform on (0, 1)."""
    if side is Side.LEFT:
        return -math.log(u)
    if side is Side.RIGHT:
        return -math.log1p(-u)
    return -0.5 * (math.log(u) + math.log1p(-u))


_H = {Side.LEFT: h_left, Side.RIGHT: h_right, Side.TWO_SIDED: h_two}

# mirror duality: 1 - h_side(u) = h_mirror(1 - u), which evaluates weighted
# survival directly from the base survival without cancellation
_MIRROR = {Side.LEFT: h_right, Side.RIGHT: h_left, Side.TWO_SIDED: h_two}

_CORE_ROOT = RootConfig(x_tol=1e-15, f_tol=1e-15, max_iters=200)
_U_CEIL = math.nextafter(1.0, 0.0)


def invert_core(side: Side, p: float) -> float:
    """Solve h_side(u) = p for u in (0, 1); h is strictly increasing there."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must lie in (0, 1), got {p}")
    h = _H[side]
    u = find_root(lambda v: h(v) - p, 1e-300, _U_CEIL, _CORE_ROOT)
    # Newton polish; the log-derivative is exact and cheap
    for _ in range(2):
        d = h_prime(side, u)
        if not math.isfinite(d) or d == 0.0:
            break
        step = (h(u) - p) / d
        cand = u - step
        if 0.0 < cand < 1.0:
            u = cand
    return u


def ppf_u2tail(alpha: float) -> float:
    """Quantile of the two-sided weighted uniform law, the inverse of h_two."""
    return invert_core(Side.TWO_SIDED, alpha)


# vectorized inverse used by the sampler: 4096-knot monotone interpolant of
# h_side^{-1} with endpoint-clustered knots, refined by Newton steps
_N_KNOTS = 4096


@lru_cache(maxsize=None)
def _core_inverse_table(side: Side) -> tuple[np.ndarray, np.ndarray]:
    j = np.arange(1, _N_KNOTS + 1)
    u = np.sin(0.5 * np.pi * j / (_N_KNOTS + 1)) ** 2
    p = _h_np(side, u)
    return p, u


def _h_np(side: Side, u: np.ndarray) -> np.ndarray:
    lu = np.log(u)
    l1u = np.log1p(-u)
    if side is Side.LEFT:
        return u * (1.0 - lu)
    if side is Side.RIGHT:
        return u + (1.0 - u) * l1u
    return u - 0.5 * u * lu + 0.5 * (1.0 - u) * l1u


def _h_prime_np(side: Side, u: np.ndarray) -> np.ndarray:
    if side is Side.LEFT:
        return -np.log(u)
    if side is Side.RIGHT:
        return -np.log1p(-u)
    return -0.5 * (np.log(u) + np.log1p(-u))


def invert_core_array(side: Side, p: np.ndarray) -> np.ndarray:
    """Vectorized h_side^{-1} with |h(u) - p| <= 1e-10 guaranteed."""
    p = np.asarray(p, dtype=float)
    p_knots, u_knots = _core_inverse_table(side)
    u = np.interp(p, p_knots, u_knots)
    u = np.clip(u, 1e-300, _U_CEIL)
    for _ in range(4):
        step = (_h_np(side, u) - p) / _h_prime_np(side, u)
        u = np.clip(u - step, 1e-300, _U_CEIL)
    # scalar re-solve for the rare stragglers (extreme-tail p beyond the knots)
    residual = np.abs(_h_np(side, u) - p)
    for i in np.nonzero(residual > 1e-10)[0]:
        u[i] = invert_core(side, float(p[i]))
    return u


# ---------------------------------------------------------------------------
# the weighted distribution itself
# ---------------------------------------------------------------------------


def _log_cdf_sf(base: BaseDistribution, x: float) -> tuple[float, float, float, float]:
    """(cdf, sf, ln cdf, ln sf) with the stabler log branch on each side.

    ln(sf) goes through the catalog's closed-form ``log_sf`` so deep-tail
    evaluations stay finite after 1 - cdf has underflowed to zero.
    """
    c = base.cdf(x)
    s = base.sf(x)
    if c == 0.0:
        lc = -math.inf
    elif c <= 0.5:
        lc = math.log(c)
    else:
        lc = math.log1p(-s)
    ls = base.log_sf(x) if s <= 0.5 else math.log1p(-c)
    return c, s, lc, ls


@dataclass(frozen=True)
class WeightedDistribution:
    """A base law reweighted by left, right, or two-sided tail information."""

    base: BaseDistribution
    side: Side = Side.LEFT

    @property
    def support(self) -> Support:
        return self.base.support

    def pdf(self, x: float) -> float:
        f = self.base.pdf(x)
        if f == 0.0:
            return 0.0
        _, _, lc, ls = _log_cdf_sf(self.base, x)
        if self.side is Side.LEFT:
            weight = -lc
        elif self.side is Side.RIGHT:
            weight = -ls
        else:
            weight = -0.5 * (lc + ls)
        if math.isinf(weight):
            # a genuine endpoint singularity only if the density is not itself
            # vanishing; with f below 1e-300 the true product is < 1e-297
            return math.inf if f > 1e-300 else 0.0
        return f * weight

    def cdf(self, x: float) -> float:
        return _H[self.side](self.base.cdf(x))

    def sf(self, x: float) -> float:
        """Weighted survival via the mirrored transform of the base survival."""
        return _MIRROR[self.side](self.base.sf(x))

    def log_sf(self, x: float) -> float:
        L = self.base.log_sf(x)
        if L == -math.inf:
            return -math.inf
        if L >= -1e-3:
            s = self.sf(x)
            return math.log(s) if s > 0.0 else -math.inf
        s = math.exp(L)
        if self.side is Side.RIGHT:
            return L + math.log(1.0 - L)
        if s > 1e-3:
            return math.log(self.sf(x))
        # series for the mirrored transforms at small base survival s:
        #   left: s^2/2 (1 + s/3 + s^2/6),  two: s/2 ((1 - ln s) + s/2 (1 + s/3))
        if self.side is Side.LEFT:
            return 2.0 * L + math.log(0.5 * (1.0 + s / 3.0 + s * s / 6.0))
        return L + math.log(0.5 * ((1.0 - L) + 0.5 * s * (1.0 + s / 3.0)))

    def ppf(self, p: float) -> float:
        """Inverse CDF: invert the core transform, then the base quantile."""
        return self.base.ppf(invert_core(self.side, p))

    def pdf_prime(self, x: float) -> float:
        """Derivative of the weighted density on the support interior."""
        f = self.base.pdf(x)
        fp = self.base.pdf_prime(x)
        c, s, lc, ls = _log_cdf_sf(self.base, x)
        if self.side is Side.LEFT:
            return -fp * lc - f * f / c
        if self.side is Side.RIGHT:
            return -fp * ls + f * f / s
        return 0.5 * (-fp * lc - f * f / c) + 0.5 * (-fp * ls + f * f / s)

    def spec_string(self) -> str:
        return f"{self.side.value}[{self.base.spec_string()}]"

    def __str__(self) -> str:
        return self.spec_string()


# fractions of the base CDF at which a weighted density crosses its base
# density: -ln F = 1, -ln(1-F) = 1, and F(1-F) = e^{-2} respectively
_CROSS_TWO_DELTA = math.sqrt(math.e**2 - 4.0) / math.e
CROSSING_FRACTIONS = {
    Side.LEFT: (math.exp(-1.0),),
    Side.RIGHT: (1.0 - math.exp(-1.0),),
    Side.TWO_SIDED: (
        0.5 * (1.0 - _CROSS_TWO_DELTA),
        0.5 * (1.0 + _CROSS_TWO_DELTA),
    ),
}


def crossing_points(w: WeightedDistribution) -> list[float]:
    """x where the weighted density equals the base density."""
    return [w.base.ppf(u) for u in CROSSING_FRACTIONS[w.side]]


def cumulative_hazard(d: BaseDistribution, x: float) -> float:
    """-ln(1 - F(x)); +inf once the survival vanishes (documented, not an error)."""
    return -d.log_sf(x)

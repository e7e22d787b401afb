"""Shared numerical kernels: adaptive quadrature and bracketed root finding.

Thin, contract-enforcing wrappers around QUADPACK (``scipy.integrate.quad``)
and Brent's method (``scipy.optimize.brentq``).  Quadrature panels sample only
interior nodes (Gauss-Kronrod), so integrable endpoint singularities such as
the log blow-ups of weighted densities are handled without ever evaluating at
the singular point.  Infinite endpoints are mapped onto a finite interval by
the QUADPACK substitution (x = a + (1-t)/t and its two-sided analogue).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

from scipy import integrate as _sci_integrate
from scipy import optimize as _sci_optimize


@dataclass(frozen=True)
class Undefined:
    """Marker value for quantities with no finite result (divergent moments)."""

    reason: str = ""

    def __repr__(self) -> str:
        return f"undefined({self.reason})" if self.reason else "undefined"

    def __bool__(self) -> bool:
        return False


UNDEFINED = Undefined()


def is_undefined(value) -> bool:
    return isinstance(value, Undefined)


class BracketError(ValueError):
    """The supplied root bracket does not enclose a sign change."""


class DivergenceError(ArithmeticError):
    """A finite result was required but the computation signalled divergence."""


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_subdivisions: int = 2000

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")


@dataclass(frozen=True)
class RootConfig:
    x_tol: float = 1e-12
    f_tol: float = 1e-12
    max_iters: int = 200

    def __post_init__(self):
        if self.x_tol <= 0 or self.f_tol <= 0:
            raise ValueError("root tolerances must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")


DEFAULT_QUADRATURE = QuadratureConfig()
DEFAULT_ROOT = RootConfig()


@dataclass(frozen=True)
class IntegralResult:
    """Quadrature outcome; ``converged=False`` is a first-class divergence signal."""

    value: float
    error: float
    converged: bool

    def require_finite(self) -> float:
        if not self.converged or not math.isfinite(self.value):
            raise DivergenceError(
                f"integral did not converge (value={self.value!r}, err={self.error!r})"
            )
        return self.value


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> IntegralResult:
    """Adaptive quadrature of ``f`` on (a, b); endpoints may be +-inf.

    Convergence means the adaptive error estimate contracted below
    ``max(abs_tol, rel_tol * |value|)`` without QUADPACK reporting trouble.
    Divergent or too-slowly-convergent integrals come back with
    ``converged=False`` rather than raising; moment routines turn that into an
    explicit :data:`UNDEFINED`.
    """
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", _sci_integrate.IntegrationWarning)
        try:
            value, err = _sci_integrate.quad(
                f,
                a,
                b,
                epsabs=cfg.abs_tol,
                epsrel=cfg.rel_tol,
                limit=cfg.max_subdivisions,
            )
        except (OverflowError, ZeroDivisionError):
            return IntegralResult(math.nan, math.inf, False)
    flagged = any(
        issubclass(w.category, _sci_integrate.IntegrationWarning) for w in caught
    )
    tol = max(cfg.abs_tol, cfg.rel_tol * abs(value))
    converged = (not flagged) and math.isfinite(value) and err <= 50.0 * tol
    return IntegralResult(value, err, converged)


def integrate_split(
    f: Callable[[float], float],
    points: list[float],
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> IntegralResult:
    """Sum of panel integrals over consecutive pairs in ``points``."""
    total = 0.0
    err = 0.0
    ok = True
    for lo, hi in zip(points, points[1:]):
        part = integrate(f, lo, hi, cfg)
        total += part.value
        err += part.error
        ok = ok and part.converged
    return IntegralResult(total, err, ok)


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: RootConfig = DEFAULT_ROOT,
) -> float:
    """Root of continuous ``f`` inside the sign-changing bracket [lo, hi].

    Brent's method: inverse-quadratic / secant steps with a bisection
    safeguard, so convergence is guaranteed for any continuous f with
    f(lo) * f(hi) <= 0.  Steps depend only on ratios of f values, so the
    returned root is invariant under positive rescaling of f.
    """
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}")
    root = _sci_optimize.brentq(f, lo, hi, xtol=cfg.x_tol, maxiter=cfg.max_iters)
    return float(root)

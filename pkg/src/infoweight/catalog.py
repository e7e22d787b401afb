"""Closed-form catalog of base distributions.

Each family exposes pdf, cdf, survival, quantile, the pdf derivative (needed
by the mode search), a deep-tail ``log_sf``, and support metadata.  Scale,
location and shape parameters generalize the fixed reference parameterizations
(e.g. N(0,1), E(1)) used by the regression tables, which arise as special
cases.  All closed-form inverses are used where they exist; the normal and
Maxwell-Boltzmann quantiles are obtained by bracketed root solving on the CDF.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, fields
from typing import ClassVar

from .numerics import RootConfig, find_root

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

_QUANTILE_ROOT = RootConfig(x_tol=1e-14, f_tol=1e-14, max_iters=200)


class ParameterError(ValueError):
    """A distribution parameter lies outside its legal domain."""


@dataclass(frozen=True)
class Support:
    """Closed-interval support; endpoints may be -inf / +inf."""

    lower: float
    upper: float

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ParameterError(f"empty support [{self.lower}, {self.upper}]")

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    @property
    def bounded_below(self) -> bool:
        return math.isfinite(self.lower)

    @property
    def bounded_above(self) -> bool:
        return math.isfinite(self.upper)


def _require_positive(name: str, value: float) -> None:
    if not (value > 0) or not math.isfinite(value):
        raise ParameterError(f"{name} must be a positive finite real, got {value}")


def _check_probability(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must lie in (0, 1), got {p}")


class BaseDistribution:
    """Common closed-form surface shared by every catalog family."""

    kind: ClassVar[str] = ""

    @property
    def support(self) -> Support:
        raise NotImplementedError

    def pdf(self, x: float) -> float:
        raise NotImplementedError

    def cdf(self, x: float) -> float:
        raise NotImplementedError

    def sf(self, x: float) -> float:
        """Survival function, the exact floating-point complement 1 - cdf."""
        return 1.0 - self.cdf(x)

    def log_sf(self, x: float) -> float:
        """log survival; overridden with closed forms where the tail needs it."""
        s = self.sf(x)
        return math.log(s) if s > 0.0 else -math.inf

    def ppf(self, p: float) -> float:
        raise NotImplementedError

    def pdf_prime(self, x: float) -> float:
        """Derivative of the density on the support interior."""
        raise NotImplementedError

    def _ppf_by_root(self, p: float, lo: float, hi: float) -> float:
        """Bracketed root solve of cdf(x) = p, expanding the bracket as needed."""
        _check_probability(p)
        span = hi - lo
        if not self.support.bounded_below:
            while self.cdf(lo) > p:
                lo -= span
                span *= 2.0
        while self.cdf(hi) < p:
            hi += span
            span *= 2.0
        return find_root(lambda x: self.cdf(x) - p, lo, hi, _QUANTILE_ROOT)

    def spec_string(self) -> str:
        """Canonical ``name(p1,p2)`` spec understood by :func:`parse_distribution`."""
        params = ",".join(format(getattr(self, f.name), "g") for f in fields(self))
        return f"{self.kind}({params})" if params else self.kind

    def __str__(self) -> str:
        return self.spec_string()


@dataclass(frozen=True)
class Uniform(BaseDistribution):
    a: float = 0.0
    b: float = 1.0

    kind: ClassVar[str] = "uniform"

    def __post_init__(self):
        if not self.a < self.b:
            raise ParameterError(f"uniform needs a < b, got ({self.a}, {self.b})")

    @property
    def support(self) -> Support:
        return Support(self.a, self.b)

    def pdf(self, x: float) -> float:
        return 1.0 / (self.b - self.a) if self.a <= x <= self.b else 0.0

    def cdf(self, x: float) -> float:
        if x <= self.a:
            return 0.0
        if x >= self.b:
            return 1.0
        return (x - self.a) / (self.b - self.a)

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return self.a + p * (self.b - self.a)

    def pdf_prime(self, x: float) -> float:
        return 0.0


@dataclass(frozen=True)
class Normal(BaseDistribution):
    mu: float = 0.0
    sigma: float = 1.0

    kind: ClassVar[str] = "normal"

    def __post_init__(self):
        _require_positive("sigma", self.sigma)

    @property
    def support(self) -> Support:
        return Support(-math.inf, math.inf)

    def pdf(self, x: float) -> float:
        z = (x - self.mu) / self.sigma
        return _INV_SQRT_2PI * math.exp(-0.5 * z * z) / self.sigma

    def cdf(self, x: float) -> float:
        z = (x - self.mu) / self.sigma
        if z < 0.0:
            # erfc form keeps the lower tail accurate down to ~1e-308
            return 0.5 * math.erfc(-z / _SQRT2)
        return 0.5 * (1.0 + math.erf(z / _SQRT2))

    def log_sf(self, x: float) -> float:
        z = (x - self.mu) / self.sigma
        s = 0.5 * math.erfc(z / _SQRT2)
        return math.log(s) if s > 0.0 else -math.inf

    def ppf(self, p: float) -> float:
        return self._ppf_by_root(p, self.mu - 10.0 * self.sigma, self.mu + 10.0 * self.sigma)

    def pdf_prime(self, x: float) -> float:
        return -(x - self.mu) / (self.sigma * self.sigma) * self.pdf(x)


@dataclass(frozen=True)
class Exponential(BaseDistribution):
    rate: float = 1.0

    kind: ClassVar[str] = "exponential"

    def __post_init__(self):
        _require_positive("rate", self.rate)

    @property
    def support(self) -> Support:
        return Support(0.0, math.inf)

    def pdf(self, x: float) -> float:
        return self.rate * math.exp(-self.rate * x) if x >= 0.0 else 0.0

    def cdf(self, x: float) -> float:
        return -math.expm1(-self.rate * x) if x > 0.0 else 0.0

    def log_sf(self, x: float) -> float:
        return -self.rate * x if x > 0.0 else 0.0

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return -math.log1p(-p) / self.rate

    def pdf_prime(self, x: float) -> float:
        return -self.rate * self.pdf(x)


@dataclass(frozen=True)
class Logistic(BaseDistribution):
    mu: float = 0.0
    s: float = 1.0

    kind: ClassVar[str] = "logistic"

    def __post_init__(self):
        _require_positive("s", self.s)

    @property
    def support(self) -> Support:
        return Support(-math.inf, math.inf)

    def pdf(self, x: float) -> float:
        z = (x - self.mu) / self.s
        ez = math.exp(-abs(z))
        return ez / (self.s * (1.0 + ez) ** 2)

    def cdf(self, x: float) -> float:
        z = (x - self.mu) / self.s
        if z >= 0.0:
            return 1.0 / (1.0 + math.exp(-z))
        ez = math.exp(z)
        return ez / (1.0 + ez)

    def log_sf(self, x: float) -> float:
        z = (x - self.mu) / self.s
        if z > 30.0:
            return -z - math.log1p(math.exp(-z))
        return -math.log1p(math.exp(z))

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return self.mu + self.s * math.log(p / (1.0 - p))

    def pdf_prime(self, x: float) -> float:
        return self.pdf(x) * (1.0 - 2.0 * self.cdf(x)) / self.s


@dataclass(frozen=True)
class Rayleigh(BaseDistribution):
    sigma: float = 1.0

    kind: ClassVar[str] = "rayleigh"

    def __post_init__(self):
        _require_positive("sigma", self.sigma)

    @property
    def support(self) -> Support:
        return Support(0.0, math.inf)

    def pdf(self, x: float) -> float:
        if x < 0.0:
            return 0.0
        s2 = self.sigma * self.sigma
        return (x / s2) * math.exp(-0.5 * x * x / s2)

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return -math.expm1(-0.5 * x * x / (self.sigma * self.sigma))

    def log_sf(self, x: float) -> float:
        return -0.5 * x * x / (self.sigma * self.sigma) if x > 0.0 else 0.0

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return self.sigma * math.sqrt(-2.0 * math.log1p(-p))

    def pdf_prime(self, x: float) -> float:
        if x < 0.0:
            return 0.0
        s2 = self.sigma * self.sigma
        return math.exp(-0.5 * x * x / s2) * (1.0 - x * x / s2) / s2


@dataclass(frozen=True)
class Pareto(BaseDistribution):
    alpha: float = 1.0
    xm: float = 1.0

    kind: ClassVar[str] = "pareto"

    def __post_init__(self):
        _require_positive("alpha", self.alpha)
        _require_positive("xm", self.xm)

    @property
    def support(self) -> Support:
        return Support(self.xm, math.inf)

    def pdf(self, x: float) -> float:
        if x < self.xm:
            return 0.0
        return self.alpha * self.xm**self.alpha / x ** (self.alpha + 1.0)

    def cdf(self, x: float) -> float:
        if x <= self.xm:
            return 0.0
        return -math.expm1(self.alpha * math.log(self.xm / x))

    def log_sf(self, x: float) -> float:
        if x <= self.xm:
            return 0.0
        return self.alpha * (math.log(self.xm) - math.log(x))

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return self.xm * (1.0 - p) ** (-1.0 / self.alpha)

    def pdf_prime(self, x: float) -> float:
        if x < self.xm:
            return 0.0
        return -(self.alpha + 1.0) * self.pdf(x) / x


@dataclass(frozen=True)
class Cauchy(BaseDistribution):
    x0: float = 0.0
    gamma: float = 1.0

    kind: ClassVar[str] = "cauchy"

    def __post_init__(self):
        _require_positive("gamma", self.gamma)

    @property
    def support(self) -> Support:
        return Support(-math.inf, math.inf)

    def pdf(self, x: float) -> float:
        u = (x - self.x0) / self.gamma
        return 1.0 / (math.pi * self.gamma * (1.0 + u * u))

    def cdf(self, x: float) -> float:
        u = (x - self.x0) / self.gamma
        if u < 0.0:
            # atan(-1/u)/pi avoids the 1/2 - 1/2 cancellation in the lower tail
            return math.atan(-1.0 / u) / math.pi
        return 0.5 + math.atan(u) / math.pi

    def log_sf(self, x: float) -> float:
        u = (x - self.x0) / self.gamma
        if u <= 0.0:
            return math.log(self.sf(x))
        # atan(1/u)/pi is the survival, stable deep into the upper tail
        return math.log(math.atan(1.0 / u) / math.pi)

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return self.x0 + self.gamma * math.tan(math.pi * (p - 0.5))

    def pdf_prime(self, x: float) -> float:
        u = (x - self.x0) / self.gamma
        return -2.0 * u / (self.gamma * (1.0 + u * u)) * self.pdf(x)


@dataclass(frozen=True)
class Weibull(BaseDistribution):
    lam: float = 1.0
    k: float = 1.0

    kind: ClassVar[str] = "weibull"

    def __post_init__(self):
        _require_positive("lam", self.lam)
        _require_positive("k", self.k)

    @property
    def support(self) -> Support:
        return Support(0.0, math.inf)

    def pdf(self, x: float) -> float:
        if x < 0.0:
            return 0.0
        if x == 0.0:
            if self.k < 1.0:
                return math.inf
            return self.k / self.lam if self.k == 1.0 else 0.0
        z = x / self.lam
        return (self.k / self.lam) * z ** (self.k - 1.0) * math.exp(-(z**self.k))

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return -math.expm1(-((x / self.lam) ** self.k))

    def log_sf(self, x: float) -> float:
        return -((x / self.lam) ** self.k) if x > 0.0 else 0.0

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return self.lam * (-math.log1p(-p)) ** (1.0 / self.k)

    def pdf_prime(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        z = x / self.lam
        return self.pdf(x) * ((self.k - 1.0) / x - self.k * z ** (self.k - 1.0) / self.lam)


@dataclass(frozen=True)
class MaxwellBoltzmann(BaseDistribution):
    a: float = 1.0

    kind: ClassVar[str] = "maxwellboltzmann"

    def __post_init__(self):
        _require_positive("a", self.a)

    @property
    def support(self) -> Support:
        return Support(0.0, math.inf)

    def pdf(self, x: float) -> float:
        if x < 0.0:
            return 0.0
        z = x / self.a
        return _SQRT_2_OVER_PI * z * z * math.exp(-0.5 * z * z) / self.a

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        z = x / self.a
        if z < 1e-4:
            # series: the direct form is a difference of near-equal terms here
            z2 = z * z
            return _SQRT_2_OVER_PI * z * z2 / 3.0 * (1.0 - 0.3 * z2 + 3.0 * z2 * z2 / 56.0)
        return math.erf(z / _SQRT2) - _SQRT_2_OVER_PI * z * math.exp(-0.5 * z * z)

    def log_sf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        z = x / self.a
        s = math.erfc(z / _SQRT2) + _SQRT_2_OVER_PI * z * math.exp(-0.5 * z * z)
        return math.log(s) if s > 0.0 else -math.inf

    def ppf(self, p: float) -> float:
        return self._ppf_by_root(p, 0.0, 10.0 * self.a)

    def pdf_prime(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return self.pdf(x) * (2.0 / x - x / (self.a * self.a))


@dataclass(frozen=True)
class Kumaraswamy(BaseDistribution):
    a: float = 1.0
    b: float = 1.0

    kind: ClassVar[str] = "kumaraswamy"

    def __post_init__(self):
        _require_positive("a", self.a)
        _require_positive("b", self.b)

    @property
    def support(self) -> Support:
        return Support(0.0, 1.0)

    def pdf(self, x: float) -> float:
        if not 0.0 <= x <= 1.0:
            return 0.0
        if x == 0.0:
            if self.a < 1.0:
                return math.inf
            return self.a * self.b if self.a == 1.0 else 0.0
        if x == 1.0:
            if self.b < 1.0:
                return math.inf
            return self.a * self.b if self.b == 1.0 else 0.0
        return self.a * self.b * x ** (self.a - 1.0) * (1.0 - x**self.a) ** (self.b - 1.0)

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        if x >= 1.0:
            return 1.0
        return -math.expm1(self.b * math.log1p(-(x**self.a)))

    def log_sf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        if x >= 1.0:
            return -math.inf
        return self.b * math.log1p(-(x**self.a))

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return (1.0 - (1.0 - p) ** (1.0 / self.b)) ** (1.0 / self.a)

    def pdf_prime(self, x: float) -> float:
        if not 0.0 < x < 1.0:
            return 0.0
        xa = x**self.a
        return self.pdf(x) * (
            (self.a - 1.0) / x - self.a * (self.b - 1.0) * xa / (x * (1.0 - xa))
        )


@dataclass(frozen=True)
class Gumbel(BaseDistribution):
    kind: ClassVar[str] = "gumbel"

    @property
    def support(self) -> Support:
        return Support(-math.inf, math.inf)

    def pdf(self, x: float) -> float:
        return math.exp(-x - math.exp(-x))

    def cdf(self, x: float) -> float:
        return math.exp(-math.exp(-x))

    def log_sf(self, x: float) -> float:
        s = -math.expm1(-math.exp(-x))
        return math.log(s) if s > 0.0 else -math.inf

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return -math.log(-math.log(p))

    def pdf_prime(self, x: float) -> float:
        return self.pdf(x) * (math.exp(-x) - 1.0)


@dataclass(frozen=True)
class Frechet(BaseDistribution):
    alpha: float = 1.0

    kind: ClassVar[str] = "frechet"

    def __post_init__(self):
        _require_positive("alpha", self.alpha)

    @property
    def support(self) -> Support:
        return Support(0.0, math.inf)

    def pdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return self.alpha * x ** (-self.alpha - 1.0) * math.exp(-(x**-self.alpha))

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return math.exp(-(x**-self.alpha))

    def log_sf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        s = -math.expm1(-(x**-self.alpha))
        return math.log(s) if s > 0.0 else -math.inf

    def ppf(self, p: float) -> float:
        _check_probability(p)
        return (-math.log(p)) ** (-1.0 / self.alpha)

    def pdf_prime(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return self.pdf(x) * (
            -(self.alpha + 1.0) / x + self.alpha * x ** (-self.alpha - 1.0)
        )


_FAMILIES: tuple[type[BaseDistribution], ...] = (
    Uniform,
    Normal,
    Exponential,
    Logistic,
    Rayleigh,
    Pareto,
    Cauchy,
    Weibull,
    MaxwellBoltzmann,
    Kumaraswamy,
    Gumbel,
    Frechet,
)

_REGISTRY: dict[str, type[BaseDistribution]] = {cls.kind: cls for cls in _FAMILIES}
_REGISTRY["maxwell"] = MaxwellBoltzmann

_SPEC_RE = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\(([^()]*)\))?\s*$")


def parse_distribution(spec: str) -> BaseDistribution:
    """Parse a ``name(p1,p2)`` spec string, case-insensitive, e.g. ``pareto(2,1)``."""
    m = _SPEC_RE.match(spec)
    if m is None:
        raise ValueError(f"malformed distribution spec: {spec!r}")
    name = m.group(1).lower()
    cls = _REGISTRY.get(name)
    if cls is None:
        known = ", ".join(sorted(_REGISTRY))
        raise ValueError(f"unknown distribution {name!r} (known: {known})")
    raw = (m.group(2) or "").strip()
    try:
        args = [float(tok) for tok in raw.split(",")] if raw else []
    except ValueError as exc:
        raise ValueError(f"bad numeric parameter in spec {spec!r}") from exc
    try:
        return cls(*args)
    except TypeError as exc:
        raise ParameterError(f"wrong number of parameters for {name!r}: {spec!r}") from exc


def standard_catalog() -> list[BaseDistribution]:
    """The ten standard catalog members at their reference parameterizations."""
    return [
        Uniform(0.0, 1.0),
        Normal(0.0, 1.0),
        Exponential(1.0),
        Logistic(0.0, 1.0),
        Rayleigh(1.0),
        Pareto(2.0, 1.0),
        Cauchy(0.0, 1.0),
        Weibull(1.0, 2.0),
        MaxwellBoltzmann(1.0),
        Kumaraswamy(2.0, 3.0),
    ]

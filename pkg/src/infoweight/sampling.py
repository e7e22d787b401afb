"""Seeded inverse-transform sampling and goodness-of-fit helpers.

Every weighted CDF is h_side composed with the base CDF, and both factors are
invertible, so inverse-transform sampling is exact: no rejection step.  The
scalar core inversion is amortized over a sample batch by the cached knot
interpolant in :mod:`.weighting`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .weighting import WeightedDistribution, invert_core_array

# pinned generator identity; golden sample files stay valid only against this
ALGORITHM_ID = "numpy-pcg64"

# KS acceptance threshold coefficient at the 1% level (asymptotic)
KS_1PCT_COEFF = 1.63


@dataclass
class SampleStream:
    """Deterministic uniform stream: same (seed, spawn_key) => same numbers.

    Single-owner: concurrent work should use :meth:`split` children, whose
    spawn keys derive independent PCG64 states from the parent seed.
    """

    seed: int
    algorithm_id: str = ALGORITHM_ID
    spawn_key: tuple[int, ...] = ()
    consumed: int = 0
    _rng: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        if self.algorithm_id != ALGORITHM_ID:
            raise ValueError(
                f"generator identity is pinned to {ALGORITHM_ID!r}, got {self.algorithm_id!r}"
            )
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        seq = np.random.SeedSequence(int(self.seed), spawn_key=self.spawn_key)
        self._rng = np.random.Generator(np.random.PCG64(seq))

    def uniforms(self, n: int) -> np.ndarray:
        u = self._rng.random(n)
        self.consumed += n
        return u

    def split(self, index: int) -> "SampleStream":
        return SampleStream(self.seed, self.algorithm_id, self.spawn_key + (index,))


def sample_from_uniforms(dist, us) -> np.ndarray:
    """Map uniforms through the quantile function of ``dist``."""
    us = np.asarray(us, dtype=float)
    us = np.where(us <= 0.0, 1e-300, us)  # rng yields [0, 1); guard the 0 edge
    if isinstance(dist, WeightedDistribution):
        vs = invert_core_array(dist.side, us)
        return np.array([dist.base.ppf(float(v)) for v in vs])
    return np.array([dist.ppf(float(u)) for u in us])


def sample(dist, n: int, stream: SampleStream) -> np.ndarray:
    """n inverse-transform samples drawn from the stream."""
    if n < 1:
        raise ValueError(f"sample size must be >= 1, got {n}")
    return sample_from_uniforms(dist, stream.uniforms(n))


def ks_statistic(samples, cdf) -> tuple[float, float]:
    """(D_n, 1% acceptance threshold 1.63/sqrt(n)) against an analytic CDF."""
    xs = np.sort(np.asarray(samples, dtype=float))
    n = len(xs)
    if n < 10:
        raise ValueError(f"KS statistic needs at least 10 samples, got {n}")
    f = np.array([cdf(float(x)) for x in xs])
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - f)
    d_minus = np.max(f - (i - 1) / n)
    return float(max(d_plus, d_minus)), KS_1PCT_COEFF / math.sqrt(n)

"""Published reference values for the regression tables.

These constants populate the ``paper_value`` comparison column of the
``tables`` subcommand.  Every ``computed_value`` is regenerated from library
calls at run time; nothing here feeds the computation itself.  ``None`` marks
entries published as undefined.
"""

from __future__ import annotations

# (base spec, weighted-left mean, weighted-left variance, base mean, base variance)
MOMENTS_LEFT: list[tuple[str, float | None, float | None, float | None, float | None]] = [
    ("uniform(0,1)", 0.25, 0.048611, 0.5, 0.083333),
    ("normal(0,1)", -0.903197, 0.779875, 0.0, 1.0),
    ("exponential(1)", 0.355066, 0.179946, 1.0, 1.0),
    ("logistic(0,1)", -1.644934, 2.988185, 0.0, 3.289868),
    ("rayleigh(1)", 0.716437, 0.196849, 1.253314, 0.4292034),
    ("pareto(2,1)", 1.227411, 0.138392, 2.0, None),
    ("cauchy(0,1)", None, None, None, None),
    ("weibull(1,2)", 0.506598, 0.098424, 0.886227, 0.214602),
    ("maxwellboltzmann(1)", 1.02814, 0.239568, 1.595769, 0.453521),
    ("kumaraswamy(2,3)", 0.278825, 0.025917, 0.457143, 0.25),
]

# the published base-variance cell for kumaraswamy(2,3) is E[X^2], not the
# variance; the independent quadrature value is ~0.041020 (= 201/4900)
KNOWN_DISCREPANCIES = {("kumaraswamy(2,3)", "none", "variance")}

# compact-support tail table: spec, side, arc length, >90% tail arc length,
# survival at the upper two-sided crossing, and the 90% quantile
TAILS_TABLE: list[tuple[str, str, float, float, float, float]] = [
    ("uniform(0,1)", "none", 1.41421, 0.141421, 0.161378, 0.9),
    ("uniform(0,1)", "two", 1.43633, 0.11206, 0.234758, 0.95035),
    ("kumaraswamy(2,3)", "none", 1.48334, 0.295092, 0.161382, 0.7321),
    ("kumaraswamy(2,3)", "two", 1.44321, 0.235125, 0.234763, 0.7953),
]

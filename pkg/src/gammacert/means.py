"""Logarithmic and generalized logarithmic means of positive numbers.

The generalized logarithmic mean L_p(a, b) interpolates (for a != b)

    L_p(a, b) = [ (b^{p+1} - a^{p+1}) / ((p+1)(b - a)) ]^{1/p}      p != -1, 0
    L_{-1}(a, b) = (b - a) / (ln b - ln a)                          (log mean)
    L_0(a, b) = e^{-1} (b^b / a^a)^{1/(b-a)}                        (identric)

and L_p(a, a) = a.  L_p is increasing in p; L_1 is the arithmetic mean and
L_{-2} the geometric mean.
"""

from __future__ import annotations

import math

from .errors import DomainError

__all__ = ["gen_log_mean", "log_mean"]

#: Relative half-width of the a == b diagonal where the mean returns a.
DIAGONAL_REL_TOL = 1e-12
#: Half-width of the exceptional-exponent branches around p = -1 and p = 0.
BRANCH_TOL = 1e-9


def _require_pair(a: float, b: float) -> tuple[float, float]:
    a, b = float(a), float(b)
    for name, v in (("a", a), ("b", b)):
        if not (math.isfinite(v) and v > 0.0):
            raise DomainError(f"{name} must be a finite positive real, got {v!r}")
    return a, b


def log_mean(a: float, b: float) -> float:
    """Logarithmic mean (b - a)/(ln b - ln a), with L(a, a) = a."""
    a, b = _require_pair(a, b)
    if abs(a - b) <= DIAGONAL_REL_TOL * max(a, b):
        return a
    return (b - a) / (math.log(b) - math.log(a))


def gen_log_mean(p: float, a: float, b: float) -> float:
    """Generalized logarithmic mean L_p(a, b) for real p and a, b > 0."""
    p = float(p)
    if not math.isfinite(p):
        raise DomainError(f"p must be finite, got {p!r}")
    a, b = _require_pair(a, b)
    if abs(a - b) <= DIAGONAL_REL_TOL * max(a, b):
        return a
    if abs(p + 1.0) <= BRANCH_TOL:
        return (b - a) / (math.log(b) - math.log(a))
    if abs(p) <= BRANCH_TOL:
        # identric mean, computed in log space
        return math.exp((b * math.log(b) - a * math.log(a)) / (b - a) - 1.0)
    num = (b ** (p + 1.0) - a ** (p + 1.0)) / ((p + 1.0) * (b - a))
    return num ** (1.0 / p)

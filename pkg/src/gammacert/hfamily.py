"""The two-parameter gamma-ratio family h and its log-derivatives.

For parameters alpha (real) and y > -1, define on x > -(y+1), x != 0

    h(x) = [Gamma(x+y+1) / Gamma(y+1)]^(1/x) * (x+y+1)^(-alpha),

extended continuously to x = 0 by h(0) = exp(psi(y+1)) * (y+1)^(-alpha).
The companion normalization bigH uses Gamma(x+y)/Gamma(y) (shift y -> y-1).

Every derivative of ln h has the closed form (u = x+y+1, k >= 1)

    (ln h)^(k)(x) = k!/x^(k+1) * [ (-1)^k (lnGamma(u) - lnGamma(y+1))
                                   + sum_{i=1}^{k} (-1)^(k-i) x^i psi^(i-1)(u)/i! ]
                    + (-1)^k (k-1)! alpha / u^k,

with psi^(0) = digamma, so order k needs polygamma orders up to k-1 only.
The bracket suffers catastrophic cancellation as x -> 0 (it is O(x^(k+1))),
hence the evaluation exclusion zone |x| < X_EPSILON.

``alpha_necessary_bound`` is the threshold surface

    B(x, y) = (u/x^2) * (x psi(u) - lnGamma(u) + lnGamma(y+1)):

(ln h)'(x) = (x^2/u) * (B(x, y) - alpha) / x^2 * ... i.e. sign((ln h)')
 = sign(B - alpha) for x > 0 and flips meaning across the family; B has
limits 1/(y+1) as x -> -(y+1)+ and 1 as x -> +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapabilityError, DomainError, PrecisionError
from .gammakit import MAX_DERIV_ORDER, EvalOptions, digamma, lngamma, polygamma

__all__ = [
    "DerivSample",
    "ENDPOINT_CLEARANCE",
    "HParams",
    "X_EPSILON",
    "alpha_necessary_bound",
    "bigH_eval",
    "h_eval",
    "log_h",
    "logh_deriv",
    "logh_derivs_with_scale",
    "q_surface",
]

#: Half-width of the x = 0 exclusion zone for closed-form log-derivatives.
X_EPSILON = 1e-3
#: Minimum distance of u = x+y+1 from the left endpoint of the domain.
ENDPOINT_CLEARANCE = 1e-9


@dataclass(frozen=True)
class HParams:
    """Parameter pair (alpha, y) of the family; requires finite alpha, y > -1."""

    alpha: float
    y: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha):
            raise DomainError(f"alpha must be finite, got {self.alpha!r}")
        if not (math.isfinite(self.y) and self.y > -1.0):
            raise DomainError(f"y must be a finite real > -1, got {self.y!r}")


@dataclass(frozen=True)
class DerivSample:
    """One evaluated derivative sign sample: order k at abscissa x."""

    k: int
    x: float
    value: float


def _shifted_argument(x: float, y: float) -> float:
    u = x + y + 1.0
    if not (math.isfinite(u) and u >= ENDPOINT_CLEARANCE):
        raise DomainError(
            f"x+y+1 must be >= {ENDPOINT_CLEARANCE:g} (domain x > -(y+1)), "
            f"got x={x!r}, y={y!r}")
    return u


def log_h(params: HParams, x: float, options: EvalOptions | None = None) -> float:
    """ln h(x) for the parameter pair; continuous through x = 0."""
    x = float(x)
    if x == 0.0:
        c = params.y + 1.0
        return digamma(c, options) - params.alpha * math.log(c)
    u = _shifted_argument(x, params.y)
    ratio = (lngamma(u, options) - lngamma(params.y + 1.0, options)) / x
    return ratio - params.alpha * math.log(u)


def h_eval(params: HParams, x: float, options: EvalOptions | None = None) -> float:
    """h(x) itself (always positive on the domain)."""
    return math.exp(log_h(params, x, options))


def bigH_eval(alpha: float, y: float, x: float,
              options: EvalOptions | None = None) -> float:
    """Companion normalization [Gamma(x+y)/Gamma(y)]^(1/x) (x+y)^(-alpha), y > 0."""
    if not (math.isfinite(y) and y > 0.0):
        raise DomainError(f"bigH_eval requires y > 0, got {y!r}")
    return h_eval(HParams(alpha=alpha, y=y - 1.0), x, options)


def _check_order(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"derivative order k must be an integer >= 1, got {k!r}")
    if k > MAX_DERIV_ORDER:
        raise CapabilityError(
            f"derivative order k={k} exceeds implemented maximum {MAX_DERIV_ORDER}")


def logh_derivs_with_scale(
    k_max: int,
    params: HParams,
    x: float,
    options: EvalOptions | None = None,
) -> list[tuple[float, float]]:
    """(value, magnitude_scale) of (ln h)^(k)(x) for every k = 1..k_max.

    The magnitude scale sums absolute values of all combined terms; it bounds
    the rounding-noise level of the value and feeds certificate noise floors.
    All orders share one table of gamma-family evaluations at u = x+y+1.
    """
    _check_order(k_max)
    x = float(x)
    if abs(x) < X_EPSILON:
        raise PrecisionError(
            f"|x| = {abs(x):.3e} is inside the cancellation exclusion zone "
            f"(< {X_EPSILON:g}) for closed-form log-derivatives")
    u = _shifted_argument(x, params.y)
    lg_u = lngamma(u, options)
    lg_y = lngamma(params.y + 1.0, options)
    # psi_tab[j] = psi^(j)(u) for j = 0..k_max-1 (order k uses up to k-1)
    psi_tab = [digamma(u, options)]
    psi_tab += [polygamma(j, u, options) for j in range(1, k_max)]
    rows: list[tuple[float, float]] = []
    for k in range(1, k_max + 1):
        lead = math.factorial(k) / x ** (k + 1)
        bracket = (-1.0) ** k * (lg_u - lg_y)
        abs_sum = abs(lg_u) + abs(lg_y)
        for i in range(1, k + 1):
            t = x ** i * psi_tab[i - 1] / math.factorial(i)
            bracket += (-1.0) ** (k - i) * t
            abs_sum += abs(t)
        alpha_term = (-1.0) ** k * math.factorial(k - 1) * params.alpha / u ** k
        value = lead * bracket + alpha_term
        scale = abs(lead) * abs_sum + abs(alpha_term)
        rows.append((value, scale))
    return rows


def logh_deriv(k: int, params: HParams, x: float,
               options: EvalOptions | None = None) -> float:
    """(ln h)^(k)(x) via the closed form; |x| >= X_EPSILON required."""
    return logh_derivs_with_scale(k, params, x, options)[k - 1][0]


def alpha_necessary_bound(x: float, y: float,
                          options: EvalOptions | None = None) -> float:
    """Threshold surface B(x, y) = (u/x^2)(x psi(u) - lnGamma(u) + lnGamma(y+1)).

    sign((ln h)'(x)) = sign(B(x, y) - alpha) * sign(u)/u ... concretely
    (ln h)'(x) = (B - alpha)/u * (x^2/x^2); alpha above B forces decrease.
    Limits: B -> 1/(y+1) as x -> -(y+1)+ and B -> 1 as x -> +inf.
    Relative accuracy degrades near the removable singularity at x = 0.
    """
    x = float(x)
    if x == 0.0:
        raise DomainError("alpha_necessary_bound is undefined at x = 0 "
                          "(removable singularity); evaluate nearby instead")
    u = _shifted_argument(x, y)
    s = x * digamma(u, options) - lngamma(u, options) + lngamma(y + 1.0, options)
    return u * s / (x * x)


def q_surface(x: float, y: float, options: EvalOptions | None = None) -> float:
    """Auxiliary surface q(x, y) = x psi(u) - lnGamma(u) + lnGamma(y+1) - x^2/(2(y+1)u).

    With alpha* = 1/(2(y+1)): (ln h_{alpha*})'(x) = q(x, y)/x^2, so negativity
    of q on an interval certifies strict decrease of ln h_{alpha*} there.
    """
    x = float(x)
    u = _shifted_argument(x, y)
    s = x * digamma(u, options) - lngamma(u, options) + lngamma(y + 1.0, options)
    return s - x * x / (2.0 * (y + 1.0) * u)

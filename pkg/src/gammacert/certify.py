"""Grid certifiers for logarithmic complete monotonicity of the h family.

A PASS certificate means "no sign violation found on the specified finite
grid up to derivative order k_max" — grid-verified evidence, strictly weaker
than an analytic proof.  A FAIL is conclusive: it carries a concrete witness
(k, x, signed value) whose magnitude clears a noise floor proportional to the
local evaluation scale.  Sign anomalies below the floor are counted as
undecided points and never flip a verdict; boundary parameter choices (alpha
exactly at a monotonicity threshold) therefore certify PASS.

Sign contract: h is logarithmically completely monotonic (LCM) when
(-1)^k (ln h)^(k) > 0 for all k >= 1; its reciprocal is LCM when the same
quantity is < 0.  The two directions are pointwise negations of each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ParameterError
from .gammakit import MAX_DERIV_ORDER, digamma, lngamma
from .hfamily import (
    ENDPOINT_CLEARANCE,
    X_EPSILON,
    DerivSample,
    HParams,
    alpha_necessary_bound,
    log_h,
    logh_deriv,
    logh_derivs_with_scale,
    q_surface,
)

__all__ = [
    "Certificate",
    "Classification",
    "Direction",
    "GridSpec",
    "NOISE_FLOOR_REL",
    "ScanCell",
    "Spacing",
    "Verdict",
    "certify_lcm",
    "classify",
    "default_grid",
    "finite_diff_crosscheck",
    "grid_points",
    "in_conjecture_zone",
    "necessity_limits",
    "scan_alpha_y",
    "scan_values",
    "verify_thm3",
]

#: Violations below this fraction of the local evaluation scale are
#: inconclusive (counted, never failed).
NOISE_FLOOR_REL = 1e-9


class Direction(str, Enum):
    LCM = "LCM"
    RECIPROCAL = "RECIPROCAL"


class Spacing(str, Enum):
    LOG = "LOG"
    LINEAR = "LINEAR"


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


class Classification(str, Enum):
    LCM = "LCM"
    RECIPROCAL = "RECIPROCAL"
    NEITHER = "NEITHER"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid in x for one parameter pair.

    The grid lives on u = x + y + 1 from x_min_offset (distance above the
    left endpoint -(y+1)) up to x_max + y + 1, with LOG or LINEAR spacing;
    abscissae inside the |x| < x_epsilon exclusion zone are dropped.
    """

    x_min_offset: float
    x_max: float
    points: int = 200
    spacing: Spacing = Spacing.LOG
    x_epsilon: float = X_EPSILON

    def __post_init__(self) -> None:
        if not (isinstance(self.x_min_offset, (int, float))
                and math.isfinite(self.x_min_offset) and self.x_min_offset > 0.0):
            raise ParameterError(
                f"x_min_offset must be a finite positive real, got {self.x_min_offset!r}")
        if not (isinstance(self.x_max, (int, float)) and math.isfinite(self.x_max)):
            raise ParameterError(f"x_max must be finite, got {self.x_max!r}")
        if not (isinstance(self.points, int) and not isinstance(self.points, bool)
                and self.points >= 2):
            raise ParameterError(f"points must be an integer >= 2, got {self.points!r}")
        if not isinstance(self.spacing, Spacing):
            raise ParameterError(f"spacing must be a Spacing member, got {self.spacing!r}")
        if not (isinstance(self.x_epsilon, (int, float)) and self.x_epsilon >= X_EPSILON):
            raise ParameterError(
                f"x_epsilon must be >= {X_EPSILON:g}, got {self.x_epsilon!r}")


def default_grid(y: float, points: int = 200, x_max: float = 1e3) -> GridSpec:
    """LOG grid from x = -(y+1) + 1e-4*(y+1) up to x_max (both sub-domains)."""
    return GridSpec(x_min_offset=1e-4 * (y + 1.0), x_max=float(x_max), points=points)


def grid_points(spec: GridSpec, y: float) -> np.ndarray:
    """Concrete x abscissae of spec for parameter y, exclusion zone removed."""
    u_lo = max(spec.x_min_offset, ENDPOINT_CLEARANCE)
    u_hi = spec.x_max + y + 1.0
    if not u_hi > u_lo:
        raise ParameterError(
            f"empty grid: x_max={spec.x_max!r} gives u range [{u_lo:g}, {u_hi:g}] "
            f"for y={y!r}")
    if spec.spacing is Spacing.LOG:
        u = np.geomspace(u_lo, u_hi, spec.points)
    else:
        u = np.linspace(u_lo, u_hi, spec.points)
    x = u - (y + 1.0)
    x = x[np.abs(x) >= spec.x_epsilon]
    if x.size == 0:
        raise ParameterError("grid is empty after exclusion-zone filtering")
    return x


@dataclass(frozen=True)
class Certificate:
    """Outcome of a sign-pattern check over a grid.

    check is "lcm-sign" for derivative-sign certificates (direction set,
    witness.k is the derivative order) or "surface-negativity" for the
    q-surface check (direction None; witness.k = 0 flags a non-negative
    surface value, witness.k = 1 a non-decreasing adjacent step).
    PASS semantics are always grid-verified, never analytic.
    """

    params: HParams
    direction: Direction | None
    k_max: int
    grid: GridSpec
    verdict: Verdict
    witness: DerivSample | None
    undecided_points: int = 0
    check: str = "lcm-sign"
    semantics: str = "grid-verified"

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.FAIL) != (self.witness is not None):
            raise ParameterError(
                "certificate invariant violated: FAIL iff witness present")


def certify_lcm(params: HParams, direction: Direction | str,
                k_max: int = 8, grid: GridSpec | None = None) -> Certificate:
    """Check (-1)^k (ln h)^(k)(x) sign for k = 1..k_max over the grid.

    direction LCM requires the signed quantity positive, RECIPROCAL negative.
    Search order is increasing k, then grid order; the first conclusive
    violation becomes the witness (deterministic regardless of evaluation
    strategy).
    """
    direction = Direction(direction)
    if not (isinstance(k_max, int) and not isinstance(k_max, bool)
            and 1 <= k_max <= MAX_DERIV_ORDER):
        raise ParameterError(
            f"k_max must be an integer in 1..{MAX_DERIV_ORDER}, got {k_max!r}")
    if grid is None:
        grid = default_grid(params.y)
    xs = grid_points(grid, params.y)
    want_positive = direction is Direction.LCM
    rows_cache: dict[int, list[tuple[float, float]]] = {}
    undecided = 0
    witness: DerivSample | None = None
    for k in range(1, k_max + 1):
        for idx in range(xs.size):
            rows = rows_cache.get(idx)
            if rows is None:
                rows = logh_derivs_with_scale(k_max, params, float(xs[idx]))
                rows_cache[idx] = rows
            value, scale = rows[k - 1]
            signed = value if k % 2 == 0 else -value
            ok = signed > 0.0 if want_positive else signed < 0.0
            if ok:
                continue
            if abs(signed) < NOISE_FLOOR_REL * scale:
                undecided += 1
                continue
            witness = DerivSample(k=k, x=float(xs[idx]), value=float(signed))
            break
        if witness is not None:
            break
    verdict = Verdict.FAIL if witness is not None else Verdict.PASS
    return Certificate(params=params, direction=direction, k_max=k_max,
                       grid=grid, verdict=verdict, witness=witness,
                       undecided_points=undecided)


def necessity_limits(y: float) -> tuple[float, float]:
    """Probes of the monotonicity threshold surface at its two limits.

    Returns alpha_necessary_bound at x = -(y+1) + 1e-6*(y+1) (limit value
    1/(y+1)) and at x = 1e6 (limit value 1).
    """
    HParams(alpha=0.0, y=y)  # reuse the domain validation for y
    x_inner = -(y + 1.0) + 1e-6 * (y + 1.0)
    return (alpha_necessary_bound(x_inner, y), alpha_necessary_bound(1e6, y))


def verify_thm3(y: float, grid: GridSpec | None = None) -> Certificate:
    """Negativity and strict decrease of q_surface(x, y) on [x_left, inf).

    x_left = -2(y+1)^2/(1+2y) > 0 for y in (-1, -1/2); the grid starts
    exactly at x_left (the claim includes the endpoint) and uses the
    GridSpec's points/x_max/spacing.
    """
    if not (math.isfinite(y) and -1.0 < y < -0.5):
        raise ParameterError(f"y must lie in (-1, -1/2), got {y!r}")
    if grid is None:
        grid = GridSpec(x_min_offset=1e-4 * (y + 1.0), x_max=1e3, points=200)
    x_left = -2.0 * (y + 1.0) ** 2 / (1.0 + 2.0 * y)
    if not grid.x_max > x_left:
        raise ParameterError(
            f"x_max={grid.x_max!r} must exceed the left endpoint {x_left:g}")
    if grid.spacing is Spacing.LOG:
        xs = np.geomspace(x_left, grid.x_max, grid.points)
    else:
        xs = np.linspace(x_left, grid.x_max, grid.points)
    c = y + 1.0
    undecided = 0
    witness: DerivSample | None = None
    values = np.empty(xs.size)
    scales = np.empty(xs.size)
    lgy = lngamma(c)
    for i in range(xs.size):
        x = float(xs[i])
        u = x + c
        values[i] = q_surface(x, y)
        # local magnitude scale: sum of absolute values of q's four terms
        scales[i] = (abs(x * digamma(u)) + abs(lngamma(u)) + abs(lgy)
                     + abs(x * x / (2.0 * c * u)))
    for i in range(xs.size):
        if values[i] < 0.0:
            continue
        if abs(values[i]) < NOISE_FLOOR_REL * scales[i]:
            undecided += 1
            continue
        witness = DerivSample(k=0, x=float(xs[i]), value=float(values[i]))
        break
    if witness is None:
        for i in range(xs.size - 1):
            diff = values[i + 1] - values[i]
            if diff < 0.0:
                continue
            if abs(diff) < NOISE_FLOOR_REL * max(scales[i], scales[i + 1]):
                undecided += 1
                continue
            witness = DerivSample(k=1, x=float(xs[i + 1]), value=float(diff))
            break
    verdict = Verdict.FAIL if witness is not None else Verdict.PASS
    return Certificate(params=HParams(alpha=0.5 / c, y=y), direction=None,
                       k_max=1, grid=grid, verdict=verdict, witness=witness,
                       undecided_points=undecided, check="surface-negativity")


def in_conjecture_zone(alpha: float, y: float) -> bool:
    """Parameter region where reciprocal complete monotonicity is conjectured
    to fail: y > -1/2 with min{1, 1/(2(y+1))} < alpha <= 1."""
    return y > -0.5 and min(1.0, 0.5 / (y + 1.0)) < alpha <= 1.0


@dataclass(frozen=True)
class ScanCell:
    """Classification of one (alpha, y) cell from its two certificates.

    For cells inside the conjecture zone, reciprocal_violation records
    whether the RECIPROCAL certificate found a conclusive violation
    (evidence only — the zone never classifies RECIPROCAL).
    """

    alpha: float
    y: float
    classification: Classification
    conjecture_zone: bool = False
    reciprocal_violation: bool | None = None


def classify(lcm_cert: Certificate, recip_cert: Certificate,
             conjecture_zone: bool) -> Classification:
    """Combine the two directional certificates into a cell classification."""
    lcm_pass = lcm_cert.verdict is Verdict.PASS
    rec_pass = recip_cert.verdict is Verdict.PASS
    if lcm_pass and not rec_pass:
        return Classification.LCM
    if rec_pass and not lcm_pass:
        return Classification.UNDECIDED if conjecture_zone else Classification.RECIPROCAL
    if not lcm_pass and not rec_pass:
        return Classification.NEITHER
    return Classification.UNDECIDED


def scan_values(alphas, ys, k_max: int = 8, points: int = 200,
                x_max: float = 1e3, grid: GridSpec | None = None) -> list[ScanCell]:
    """Classify every (alpha, y) combination; y-major, then alpha order."""
    cells: list[ScanCell] = []
    for y in ys:
        y = float(y)
        cell_grid = grid if grid is not None else default_grid(y, points=points,
                                                               x_max=x_max)
        for alpha in alphas:
            alpha = float(alpha)
            p = HParams(alpha=alpha, y=y)
            lcm_cert = certify_lcm(p, Direction.LCM, k_max=k_max, grid=cell_grid)
            rec_cert = certify_lcm(p, Direction.RECIPROCAL, k_max=k_max,
                                   grid=cell_grid)
            zone = in_conjecture_zone(alpha, y)
            cells.append(ScanCell(
                alpha=alpha, y=y,
                classification=classify(lcm_cert, rec_cert, zone),
                conjecture_zone=zone,
                reciprocal_violation=(rec_cert.verdict is Verdict.FAIL)
                if zone else None))
    return cells


def scan_alpha_y(alpha_range: tuple[float, float], y_range: tuple[float, float],
                 resolution: int, k_max: int = 8, points: int = 200,
                 x_max: float = 1e3, grid: GridSpec | None = None) -> list[ScanCell]:
    """Uniform resolution x resolution scan over the two parameter ranges."""
    if not (isinstance(resolution, int) and not isinstance(resolution, bool)
            and resolution >= 2):
        raise ParameterError(f"resolution must be an integer >= 2, got {resolution!r}")
    a_lo, a_hi = (float(v) for v in alpha_range)
    y_lo, y_hi = (float(v) for v in y_range)
    for name, lo, hi in (("alpha", a_lo, a_hi), ("y", y_lo, y_hi)):
        if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
            raise ParameterError(f"{name} range must be finite with end > start")
    alphas = np.linspace(a_lo, a_hi, resolution)
    ys = np.linspace(y_lo, y_hi, resolution)
    return scan_values(alphas, ys, k_max=k_max, points=points, x_max=x_max,
                       grid=grid)


def finite_diff_crosscheck(k: int, params: HParams, x: float,
                           step: float = 1e-5) -> float:
    """Relative residual between the closed-form derivative and a central
    finite difference of the next-lower order (ln h itself for k = 1)."""
    if not (isinstance(k, int) and not isinstance(k, bool) and 1 <= k <= 4):
        raise ParameterError(f"k must be an integer in 1..4, got {k!r}")
    step = float(step)
    if not (math.isfinite(step) and step > 0.0):
        raise ParameterError(f"step must be a positive real, got {step!r}")
    x = float(x)
    value = logh_deriv(k, params, x)
    if k == 1:
        base = lambda z: log_h(params, z)
    else:
        base = lambda z: logh_deriv(k - 1, params, z)
    fd = (base(x + step) - base(x - step)) / (2.0 * step)
    return abs(value - fd) / max(1.0, abs(value))

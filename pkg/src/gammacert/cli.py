"""Command-line front end: verification suites, parameter scans, reports.

Two subcommands:

- ``gammacert verify --suite NAME`` runs a named check suite and emits one
  Report (JSON by default, flat CSV rows with ``--format csv``).
- ``gammacert scan --alpha A0:A1:STEP --y Y0:Y1:STEP`` classifies a grid of
  (alpha, y) cells and emits a CSV table plus a JSON report.

Exit codes: 0 when no result failed, 1 on any failure, 2 on usage or
configuration errors.  CSV bodies contain no timestamps, so identical
invocations produce byte-identical CSV output.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .ballvol import ball_ratio_checks, recurrence_check
from .certify import (
    Certificate,
    Direction,
    GridSpec,
    ScanCell,
    Verdict,
    certify_lcm,
    default_grid,
    finite_diff_crosscheck,
    necessity_limits,
    scan_values,
    verify_thm3,
)
from .errors import DomainError, ParameterError
from .hfamily import HParams
from .ineq import (
    AuxFn,
    CheckResult,
    _one_sided,
    _two_sided,
    aux_eval,
    batir_ineq,
    gamma_ratio_ineq,
    log_upper_bound_ineq,
    polygamma_bounds,
    psi_integral_mean_ineq,
    psi_log_bounds,
    psi_upper_refinement,
    qcub_root,
    suffice_chain,
    thm2_ineq,
)
from .report import Report, build_report, dumps

__all__ = ["EXIT_FAIL", "EXIT_OK", "EXIT_USAGE", "main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

PUBLIC_SUITES = ("lemmas", "thm1", "thm2", "thm3", "ball", "aux", "all")
#: Accepted but undocumented: a suite with one deliberately false check,
#: used to exercise the exit-code contract end to end.
FAULT_SUITE = "selftest-fault"

RATIO_SAMPLE_SEED = 20260815

_SUFFICIENCY_YS = (-0.9, -0.5, 0.0, 1.0, 5.0)
_SUFFICIENCY_DELTAS = (0.0, 0.5, 2.0)
_NECESSITY_YS = (-0.5, 0.0, 1.0)
_LIMIT_YS = (-0.5, 0.0, 1.0, 5.0)
_THM3_YS = (-0.9, -0.75, -0.6, -0.51)
_CHAIN_SUP = 8.0 / 7.0


# ---------------------------------------------------------------------------
# suite builders
# ---------------------------------------------------------------------------

def _suite_lemmas(points: int, x_max: float) -> list[CheckResult]:
    out: list[CheckResult] = []
    for x in np.geomspace(1e-2, x_max, points):
        x = float(x)
        out.extend(psi_log_bounds(x))
        out.append(psi_upper_refinement(x))
        for k in range(1, 7):
            out.extend(polygamma_bounds(k, x))
    return out


def _expected_failure_check(cert: Certificate) -> CheckResult:
    """Wrap an expected-FAIL certificate: holds iff the verdict is FAIL."""
    inputs = [("alpha", cert.params.alpha), ("y", cert.params.y)]
    size = 0.0
    if cert.witness is not None:
        size = abs(cert.witness.value)
        inputs += [("witness_k", float(cert.witness.k)),
                   ("witness_x", cert.witness.x),
                   ("witness_value", cert.witness.value)]
    return CheckResult(name="lcm_certificate_fails_below_threshold",
                       inputs=tuple((n, float(v)) for n, v in inputs),
                       lhs=0.0, rhs=size, margin=size,
                       holds=cert.verdict is Verdict.FAIL, strict=True)


def _limit_check(name: str, y: float, estimate: float, target: float,
                 tol: float) -> CheckResult:
    err = abs(estimate - target)
    return CheckResult(name=name,
                       inputs=(("y", y), ("estimate", estimate),
                               ("target", target), ("tolerance", tol)),
                       lhs=err, rhs=tol, margin=tol - err,
                       holds=err <= tol, strict=False)


def ratio_samples(count: int, seed: int = RATIO_SAMPLE_SEED) -> list[CheckResult]:
    """Seeded random admissible (x, y, t) samples of the gamma-ratio window."""
    rng = np.random.default_rng(seed)
    out: list[CheckResult] = []
    while len(out) < count:
        y = float(rng.uniform(-0.9, 5.0))
        t = float(10.0 ** rng.uniform(-2.0, 2.0))
        u1 = float(10.0 ** rng.uniform(-2.0, 3.0))  # x + y + 1
        x = u1 - (y + 1.0)
        if abs(x) < 1e-2 or abs(x + t) < 1e-2:
            continue  # keep the difference quotients well conditioned
        out.append(gamma_ratio_ineq(x, y, t))
    return out


def _suite_thm1(k_max: int, points: int, x_max: float) -> list:
    out: list = []
    for y in _SUFFICIENCY_YS:
        grid = default_grid(y, points=points, x_max=x_max)
        amax = max(1.0, 1.0 / (y + 1.0))
        amin = min(1.0, 0.5 / (y + 1.0))
        for delta in _SUFFICIENCY_DELTAS:
            out.append(certify_lcm(HParams(amax + delta, y), Direction.LCM,
                                   k_max=k_max, grid=grid))
            out.append(certify_lcm(HParams(amin - delta, y),
                                   Direction.RECIPROCAL,
                                   k_max=k_max, grid=grid))
    for y in _NECESSITY_YS:
        alpha = max(1.0, 1.0 / (y + 1.0)) - 0.1
        cert = certify_lcm(HParams(alpha, y), Direction.LCM, k_max=k_max,
                           grid=default_grid(y, points=points, x_max=x_max))
        out.append(_expected_failure_check(cert))
    for y in _LIMIT_YS:
        inner, tail = necessity_limits(y)
        out.append(_limit_check("alpha_threshold_left_endpoint_limit",
                                y, inner, 1.0 / (y + 1.0), 1e-2))
        out.append(_limit_check("alpha_threshold_tail_limit",
                                y, tail, 1.0, 1e-3))
    out.extend(ratio_samples(200))
    return out


def _suite_thm2() -> list[CheckResult]:
    return [thm2_ineq(float(t)) for t in np.geomspace(1e-4, 1e3, 300)]


def _suite_thm3(points: int, x_max: float) -> list[Certificate]:
    out = []
    for y in _THM3_YS:
        grid = GridSpec(x_min_offset=1e-4 * (y + 1.0), x_max=x_max,
                        points=points)
        out.append(verify_thm3(y, grid=grid))
    return out


def _suite_ball() -> list[CheckResult]:
    out: list[CheckResult] = []
    for n in range(1, 61):
        out.extend(ball_ratio_checks(n))
    for n in range(2, 101):
        out.append(recurrence_check(n))
    return out


def _spot_check(name: str, fn: AuxFn, t: float, expected: float,
                tol: float) -> CheckResult:
    value = aux_eval(fn, t)
    err = abs(value - expected)
    return CheckResult(name=name,
                       inputs=(("t", t), ("expected", expected),
                               ("value", value), ("tolerance", tol)),
                       lhs=err, rhs=tol, margin=tol - err,
                       holds=err <= tol, strict=False)


def _suite_aux() -> list[CheckResult]:
    out: list[CheckResult] = []
    third = 1.0 / 3.0

    # exact spot values of the auxiliary polynomials (abs tol for the cubic,
    # rel tol for the sextic whose values are O(1)..O(10))
    out.append(_spot_check("aux_cubic_spot_value", AuxFn.QCUB, 0.0, -3.0, 1e-12))
    out.append(_spot_check("aux_cubic_spot_value", AuxFn.QCUB, 1.0, 14.0, 1e-12))
    out.append(_spot_check("aux_cubic_spot_value", AuxFn.QCUB, third,
                           -2.0 / 3.0, 1e-12))
    out.append(_spot_check("aux_polynomial_spot_value", AuxFn.HPOLY, third,
                           -700.0 / 81.0, 1e-12 * (700.0 / 81.0)))
    out.append(_spot_check("aux_polynomial_spot_value", AuxFn.HPOLY, _CHAIN_SUP,
                           -404759.0 / 117649.0, 1e-12 * (404759.0 / 117649.0)))

    # the logarithmic helper is barely positive at t = 8/7 ...
    out.append(_two_sided("aux_qlog_band", (("t", _CHAIN_SUP),),
                          0.002, aux_eval(AuxFn.QLOG, _CHAIN_SUP), 0.003))
    # ... positive from there on, and increasing beyond t = 1/4
    for t in np.geomspace(_CHAIN_SUP, 1e3, 100):
        t = float(t)
        out.append(_one_sided("aux_qlog_positive_from_chain_sup",
                              (("t", t),), 0.0, aux_eval(AuxFn.QLOG, t)))
    qs = [float(t) for t in np.geomspace(0.26, 1e3, 100)]
    for lo, hi in zip(qs, qs[1:]):
        out.append(_one_sided("aux_qlog_increasing_beyond_quarter",
                              (("t_lo", lo), ("t_hi", hi)),
                              aux_eval(AuxFn.QLOG, lo),
                              aux_eval(AuxFn.QLOG, hi)))

    # cubic root bracket and residual
    root = qcub_root(1e-10)
    out.append(_two_sided("aux_cubic_root_bracket",
                          (("root", root),), third, root, 1.0))
    out.append(_one_sided("aux_cubic_root_residual",
                          (("root", root),),
                          abs(aux_eval(AuxFn.QCUB, root)), 1e-8, strict=False))

    # the sextic stays negative across the open chain interval
    for t in np.linspace(third, _CHAIN_SUP, 102)[1:-1]:
        t = float(t)
        out.append(_one_sided("aux_polynomial_negative_interior",
                              (("t", t),), aux_eval(AuxFn.HPOLY, t), 0.0))

    # chained sufficiency inequalities across (0, 8/7)
    for t in np.geomspace(1e-3, _CHAIN_SUP * (1.0 - 1e-9), 100):
        out.extend(suffice_chain(float(t)))

    # digamma-at-log-mean bound, printed product form, on its worked pairs
    # (the product form does not hold for arbitrary pairs; see the quotient
    # reading exposed in the result inputs)
    out.append(batir_ineq(2.0, 1.0))
    out.append(batir_ineq(1.0, 2.0))
    out.append(batir_ineq(1.0, 1.0 / 3.0))

    # mean-value windows for integral means of psi and psi'
    for i in (0, 1):
        for s, t in ((0.5, 2.5), (1.0, 3.0), (2.0, 7.0), (0.25, 0.75)):
            out.append(psi_integral_mean_ineq(i, s, t, p=-i - 1, q=-i))
    # ... and along the chain's own pairs s = 2t^2/((2t+1)ln(2t+1)) < t,
    # whose p = -2 lower point is exactly the chain's sqrt evaluation point
    for t in np.geomspace(1e-2, 1e2, 100):
        t = float(t)
        w = (2.0 * t + 1.0) * math.log1p(2.0 * t)
        out.append(psi_integral_mean_ineq(1, 2.0 * t * t / w, t, p=-2.0, q=-1.0))

    # rational upper bound for ln(1+t)
    for t in np.geomspace(1e-2, 1e3, 200):
        out.append(log_upper_bound_ineq(float(t)))

    # closed-form derivatives against central finite differences
    fd_cases = (
        (1, 1.0, 0.0, 1.0, 1e-5),
        (2, 2.0, 1.0, 3.0, 1e-4),
        (3, 0.5, -0.5, 2.0, 1e-4),
        (4, 1.5, 0.0, 5.0, 1e-3),
        (1, 0.0, 0.0, 10.0, 1e-5),
        (2, 1.0, 4.0, 0.5, 1e-4),
    )
    for k, alpha, y, x, step in fd_cases:
        residual = finite_diff_crosscheck(k, HParams(alpha, y), x, step=step)
        out.append(CheckResult(
            name="logh_derivative_matches_finite_difference",
            inputs=(("k", float(k)), ("alpha", alpha), ("y", y), ("x", x),
                    ("step", step), ("residual", residual)),
            lhs=residual, rhs=1e-6, margin=1e-6 - residual,
            holds=residual <= 1e-6, strict=False))
    return out


def _suite_selftest_fault() -> list[CheckResult]:
    return [
        thm2_ineq(1.0),
        CheckResult(name="injected_fault_unit_interval_flip",
                    inputs=(("t", 1.0),),
                    lhs=1.0, rhs=0.0, margin=-1.0, holds=False, strict=True),
    ]


def build_suite(suite: str, k_max: int = 8, points: int = 200,
                x_max: float = 1e3) -> list:
    """Assemble the result list for one named suite."""
    if suite == "lemmas":
        return _suite_lemmas(points, x_max)
    if suite == "thm1":
        return _suite_thm1(k_max, points, x_max)
    if suite == "thm2":
        return _suite_thm2()
    if suite == "thm3":
        return _suite_thm3(points, x_max)
    if suite == "ball":
        return _suite_ball()
    if suite == "aux":
        return _suite_aux()
    if suite == "all":
        out: list = []
        for name in ("lemmas", "thm1", "thm2", "thm3", "ball", "aux"):
            out.extend(build_suite(name, k_max=k_max, points=points,
                                   x_max=x_max))
        return out
    if suite == FAULT_SUITE:
        return _suite_selftest_fault()
    raise ParameterError(
        f"unknown suite {suite!r} (choose from {', '.join(PUBLIC_SUITES)})")


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def verify_csv(report: Report) -> str:
    """Flat CSV rows for a verify report (no timestamps: byte-stable)."""
    from .report import result_status

    lines = ["kind,name,status,lhs,rhs,margin,alpha,y,verdict"]
    for item in report.results:
        status = result_status(item)
        if isinstance(item, CheckResult):
            lines.append(",".join([
                "check", item.name, status,
                _fmt(item.lhs), _fmt(item.rhs), _fmt(item.margin), "", "", ""]))
        elif isinstance(item, Certificate):
            lines.append(",".join([
                "certificate", item.check, status, "", "", "",
                _fmt(item.params.alpha), _fmt(item.params.y),
                item.verdict.value]))
        else:
            raise TypeError(f"no CSV row form for {type(item).__name__}")
    return "\n".join(lines) + "\n"


def scan_csv(cells: list[ScanCell]) -> str:
    lines = ["alpha,y,classification"]
    for cell in cells:
        lines.append(f"{_fmt(cell.alpha)},{_fmt(cell.y)},"
                     f"{cell.classification.value}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def parse_range(spec: str, label: str) -> list[float]:
    """Parse "start:end:step" (step > 0, end >= start) into grid values."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ParameterError(f"{label} must be start:end:step, got {spec!r}")
    try:
        start, end, step = (float(p) for p in parts)
    except ValueError as exc:
        raise ParameterError(
            f"{label} must be numeric start:end:step, got {spec!r}") from exc
    if not (math.isfinite(start) and math.isfinite(end) and math.isfinite(step)):
        raise ParameterError(f"{label} values must be finite, got {spec!r}")
    if step <= 0.0:
        raise ParameterError(f"{label} step must be > 0, got {step!r}")
    if end < start:
        raise ParameterError(f"{label} end must be >= start, got {spec!r}")
    count = int(math.floor((end - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammacert",
        description="Verify gamma/digamma inequality suites and "
                    "classify (alpha, y) monotonicity cells.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="run a named verification suite")
    p_verify.add_argument("--suite", required=True, metavar="SUITE",
                          help=f"one of: {', '.join(PUBLIC_SUITES)}")
    p_verify.add_argument("--kmax", type=int, default=8,
                          help="highest log-derivative order (default 8)")
    p_verify.add_argument("--grid-points", type=int, default=200,
                          help="points per evaluation grid (default 200)")
    p_verify.add_argument("--x-max", type=float, default=1e3,
                          help="upper end of evaluation grids (default 1e3)")
    p_verify.add_argument("--out", metavar="PATH",
                          help="write the report here instead of stdout")
    p_verify.add_argument("--format", choices=("json", "csv"), default="json",
                          help="report format (default json)")

    p_scan = sub.add_parser(
        "scan", help="classify a grid of (alpha, y) cells")
    p_scan.add_argument("--alpha", required=True, metavar="A0:A1:STEP",
                        help="alpha grid as start:end:step")
    p_scan.add_argument("--y", required=True, metavar="Y0:Y1:STEP",
                        help="y grid as start:end:step (y > -1)")
    p_scan.add_argument("--kmax", type=int, default=8,
                        help="highest log-derivative order (default 8)")
    p_scan.add_argument("--grid-points", type=int, default=200,
                        help="points per certificate grid (default 200)")
    p_scan.add_argument("--x-max", type=float, default=1e3,
                        help="upper end of certificate grids (default 1e3)")
    p_scan.add_argument("--out", metavar="PATH",
                        help="write the CSV here (JSON then goes to stdout)")
    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    results = build_suite(args.suite, k_max=args.kmax,
                          points=args.grid_points, x_max=args.x_max)
    report = build_report(args.suite, results, __version__)
    if args.format == "csv":
        _emit(verify_csv(report), args.out)
    else:
        _emit(dumps(report) + "\n", args.out)
    return EXIT_OK if report.summary["failed"] == 0 else EXIT_FAIL


def _cmd_scan(args: argparse.Namespace) -> int:
    alphas = parse_range(args.alpha, "--alpha")
    ys = parse_range(args.y, "--y")
    cells = scan_values(alphas, ys, k_max=args.kmax,
                        points=args.grid_points, x_max=args.x_max)
    report = build_report("scan", cells, __version__)
    text = scan_csv(cells)
    if args.out is None:
        sys.stdout.write(text)
        print(dumps(report), file=sys.stderr)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(dumps(report))
    return EXIT_OK if report.summary["failed"] == 0 else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        code = exc.code
        if isinstance(code, int):
            return code
        return EXIT_USAGE if code else EXIT_OK
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_scan(args)
    except (ParameterError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

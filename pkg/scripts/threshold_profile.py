#!/usr/bin/env python3
"""Profile of the monotonicity threshold surface B(x, y).

B(x, y) = (u/x^2) (x psi(u) - lnGamma(u) + lnGamma(y+1)), u = x+y+1, is the
alpha value at which (ln h)' changes sign at x; alpha >= sup_x B is necessary
and sufficient for decrease everywhere.  Its two proof limits are

    B -> 1/(y+1)  as x -> -(y+1)+        B -> 1  as x -> +infinity.

This script samples B across the full x range for several y values, writes a
CSV (y, x, bound), and prints each profile's observed endpoints against the
two limits.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from gammacert import alpha_necessary_bound
from gammacert.hfamily import X_EPSILON


@dataclass(frozen=True)
class ProfileConfig:
    ys: tuple[float, ...] = (-0.5, 0.0, 1.0, 5.0)
    points: int = 400
    x_max: float = 1e6
    endpoint_rel: float = 1e-6
    out: str = "threshold_profile.csv"


def profile_xs(y: float, config: ProfileConfig) -> np.ndarray:
    """Log-spaced u grid from just above the left endpoint out to x_max."""
    c = y + 1.0
    u = np.geomspace(config.endpoint_rel * c, config.x_max + c, config.points)
    x = u - c
    return x[np.abs(x) >= X_EPSILON]


def run(config: ProfileConfig) -> int:
    rows = ["y,x,bound"]
    print(f"{'y':>8}  {'B at left end':>14}  {'limit 1/(y+1)':>14}  "
          f"{'B at x_max':>12}  {'limit':>6}")
    for y in config.ys:
        xs = profile_xs(y, config)
        bounds = [alpha_necessary_bound(float(x), y) for x in xs]
        rows.extend(f"{y:.17g},{x:.17g},{b:.17g}"
                    for x, b in zip(xs, bounds))
        print(f"{y:>8.3f}  {bounds[0]:>14.9f}  {1.0 / (y + 1.0):>14.9f}  "
              f"{bounds[-1]:>12.9f}  {1.0:>6.1f}")
    with open(config.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} samples to {config.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    defaults = ProfileConfig()
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--y", type=float, action="append", dest="ys",
                        help="y value to profile (repeatable; y > -1)")
    parser.add_argument("--points", type=int, default=defaults.points)
    parser.add_argument("--x-max", type=float, default=defaults.x_max)
    parser.add_argument("--endpoint-rel", type=float,
                        default=defaults.endpoint_rel,
                        help="left-end clearance as a fraction of (y+1)")
    parser.add_argument("--out", default=defaults.out)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = ProfileConfig(
        ys=tuple(args.ys) if args.ys else ProfileConfig.ys,
        points=args.points, x_max=args.x_max,
        endpoint_rel=args.endpoint_rel, out=args.out)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

"""CHSH value of the Bell-state box against Bob's second angle.

Writes ``theta_tilde,chsh@theta=...`` columns for two values of Alice's angle,
so the step edges at pi/2 and 3pi/2 and the theta-dependent ones line up.

    python3 scripts/sweeps_vs_angle.py --n 20 --points 721 > angle_sweep.csv
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from modborn.analysis import chsh_vs_angle
from modborn.cli import parse_angle
from modborn.core import ProbabilityRule


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=float, default=20.0)
    p.add_argument("--points", type=int, default=721)
    p.add_argument("--thetas", default="3pi/8,pi/4", help="comma list of angles, e.g. 3pi/8,0.785")
    args = p.parse_args()

    thetas = [parse_angle(t) for t in args.thetas.split(",")]
    grid = np.linspace(0.0, 2 * math.pi, args.points)
    rule = ProbabilityRule(args.n)
    cols = [[v for _, v in chsh_vs_angle(t, grid, rule)] for t in thetas]
    out = sys.stdout
    out.write("theta_tilde," + ",".join(f"chsh@theta={t!r}" for t in thetas) + "\n")
    for i, tt in enumerate(grid):
        out.write(",".join(format(v, ".17g") for v in [tt, *(c[i] for c in cols)]) + "\n")


if __name__ == "__main__":
    main()

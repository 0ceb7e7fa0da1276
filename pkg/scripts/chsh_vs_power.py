"""CHSH value against the power n for both box families.

Columns: the Bell-state box at (theta, theta_tilde) = (pi/4, 11pi/8), the
CHSH-observables box and its distance 4 - B from the algebraic maximum.
Also reports the powers at which B crosses 2 sqrt2 and 4 sqrt(2/3).

    python3 scripts/chsh_vs_power.py --max-n 30 --points 301 > power_sweep.csv
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from modborn.analysis import (
    TRIVIAL_CC_THRESHOLD,
    TSIRELSON,
    chsh_observables_closed_form,
    chsh_observables_deficit,
    chsh_vs_power,
    solve_power_for_chsh,
)
from modborn.core import ProbabilityRule


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=float, default=30.0)
    p.add_argument("--points", type=int, default=301)
    args = p.parse_args()

    rules = [ProbabilityRule(n) for n in np.linspace(0.0, args.max_n, args.points)]
    bell = chsh_vs_power(math.pi / 4, 11 * math.pi / 8, rules, "bell")
    out = sys.stdout
    out.write("n,chsh_bell,chsh_observables,deficit\n")
    for rule, (_, b) in zip(rules, bell):
        row = [rule.power, b, chsh_observables_closed_form(rule), chsh_observables_deficit(rule)]
        out.write(",".join(format(v, ".17g") for v in row) + "\n")
    for name, target in (("tsirelson", TSIRELSON), ("trivial-cc", TRIVIAL_CC_THRESHOLD)):
        print(f"{name}: n = {solve_power_for_chsh(target):.10f}", file=sys.stderr)


if __name__ == "__main__":
    main()

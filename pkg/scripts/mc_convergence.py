"""Sampler error against shot count for the Bell state at (pi/4, 11pi/8, n=4).

Prints the replicate-mean maximum cell deviation per shot count and the
fitted log-log slope (about -0.5 for unbiased sampling).

    python3 scripts/mc_convergence.py --replicates 16 --seed 20240611
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from modborn.boxgen import bell_closed_form
from modborn.core import MeasurementConfig, ProbabilityRule, TwoQubitState
from modborn.oracle import mc_sampler


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--replicates", type=int, default=16)
    p.add_argument("--seed", type=int, default=20240611)
    p.add_argument("--power", type=float, default=4.0)
    args = p.parse_args()

    rule = ProbabilityRule(args.power)
    cfg = MeasurementConfig(math.pi / 4, 11 * math.pi / 8)
    ref = bell_closed_form(cfg.theta, cfg.theta_tilde, rule).table
    shots_list = [10**3, 10**4, 10**5, 10**6]
    means = []
    print("shots,mean_max_deviation")
    for shots in shots_list:
        devs = [
            np.max(np.abs(mc_sampler(TwoQubitState.bell(), cfg, rule, shots, args.seed + k).box.table - ref))
            for k in range(args.replicates)
        ]
        means.append(float(np.mean(devs)))
        print(f"{shots},{means[-1]:.6e}")
    slope = np.polyfit(np.log10(shots_list), np.log10(means), 1)[0]
    print(f"slope = {slope:.4f}", file=sys.stderr)


if __name__ == "__main__":
    main()

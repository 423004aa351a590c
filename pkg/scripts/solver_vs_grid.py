#!/usr/bin/env python3
"""Stress the quantified-condition solver against the brute-force sphere sweep.

Draws random two-mode channels, decides both quantified criteria with the
multi-start solver, re-checks each against a 131072-point low-discrepancy
sweep, and prints agreement statistics.  Useful for recalibrating solver
budgets: any HOLDS-with-grid-counterexample line indicates the budget is
too small.

Usage: python scripts/solver_vs_grid.py [--channels 50] [--seed 0]
"""

import argparse
import sys

from gauss_steer.channels import mus_condition, random_channel, sa_condition
from gauss_steer.quantifier import SolverConfig, decide, evaluate, falsify_grid
from gauss_steer.symplectic import ModePartition


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--channels", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=4000)
    parser.add_argument("--starts", type=int, default=8)
    args = parser.parse_args()

    cfg = SolverConfig(
        starts=args.starts, samples=args.samples, max_iters=300, seed=args.seed
    )
    counts = {"HOLDS": 0, "VIOLATED": 0, "UNDECIDED": 0}
    disagreements = 0
    worst_margin = float("inf")
    for k in range(args.channels):
        channel = random_channel(ModePartition(1, 1), args.seed * 100000 + k)
        for cond in (sa_condition(channel), mus_condition(channel)):
            verdict = decide(cond, cfg)
            counts[verdict.state.value] += 1
            worst_margin = min(worst_margin, verdict.value)
            witness = falsify_grid(cond, 100000)
            grid_val = None if witness is None else evaluate(cond, witness)
            if (
                verdict.holds
                and grid_val is not None
                and grid_val < -cfg.decision_margin
            ):
                disagreements += 1
                print(
                    f"channel {k}: HOLDS (margin {verdict.value:.3e}) but grid "
                    f"reached {grid_val:.3e}",
                    file=sys.stderr,
                )

    total = 2 * args.channels
    print(f"conditions decided:    {total}")
    for state, n in counts.items():
        print(f"  {state:<10} {n}")
    print(f"worst margin found:    {worst_margin:.6f}")
    print(f"grid disagreements:    {disagreements}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())

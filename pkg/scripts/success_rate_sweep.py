#!/usr/bin/env python3
"""Sweep the initial block-count ceiling and report goal-achievement rates.

Two effects compete: low ceilings leave little belief mass, so many random
goals are unreachable outright (total mass never increases under moves),
while high ceilings put more starts on band edges where quantized beliefs
miss the goal band physically.
"""

import argparse

from qbplan.worldsim import ExperimentParams, run_experiment


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--runs", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--columns", type=int, default=4)
    parser.add_argument("--ceilings", type=int, nargs="+", default=[4, 8, 12, 16])
    args = parser.parse_args()

    print(f"runs={args.runs} columns={args.columns} seed={args.seed}")
    print("max_initial  success_rate")
    for ceiling in args.ceilings:
        params = ExperimentParams(
            runs=args.runs, columns=args.columns, max_initial=ceiling, seed=args.seed
        )
        result = run_experiment(params)
        print(f"{ceiling:11d}  {result['success_rate']:.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(run())

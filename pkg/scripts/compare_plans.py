"""Compare reduction strategies A and B: step counts, base sizes, and timing.

    python3 scripts/compare_plans.py --degrees 5,5,6 --target 3,2 --seeds 10
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from habicht.instances import random_system
from habicht.reduction import STRATEGIES, evaluate_plan, plan_reduction, render_plan
from habicht.subresultant import subresultant


@dataclass(frozen=True)
class PlanConfig:
    degrees: tuple[int, ...] = (5, 5, 6)
    target: tuple[int, ...] = (3, 2)
    seeds: int = 10


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", default="5,5,6")
    ap.add_argument("--target", default="3,2")
    ap.add_argument("--seeds", type=int, default=10)
    a = ap.parse_args()
    cfg = PlanConfig(tuple(int(x) for x in a.degrees.split(",")),
                     tuple(int(x) for x in a.target.split(",")), a.seeds)

    for strategy in STRATEGIES:
        plan = plan_reduction(cfg.degrees, cfg.target, strategy)
        print(render_plan(plan))
        ok = 0
        t0 = time.perf_counter()
        for seed in range(cfg.seeds):
            F = random_system(cfg.degrees, seed)
            ok += evaluate_plan(F, plan) == subresultant(F, cfg.target).poly
        dt = time.perf_counter() - t0
        print(f"  steps={len(plan.steps)} base={len(plan.base)} "
              f"rebuilt {ok}/{cfg.seeds} exactly in {dt:.3f}s\n")


if __name__ == "__main__":
    main()

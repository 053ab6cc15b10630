"""Sweep every (w0, k, i) for a degree vector over many seeds and tabulate outcomes.

    python3 scripts/sweep.py --degrees 5,5,6 --seeds 50 --k-max 3
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from habicht.instances import random_system
from habicht.theorem import iter_params, verify_identity


@dataclass(frozen=True)
class SweepConfig:
    degrees: tuple[int, ...] = (5, 5, 6)
    seeds: int = 20
    first_seed: int = 0
    k_max: int | None = 3


def run(cfg: SweepConfig) -> Counter:
    params = list(iter_params(cfg.degrees, cfg.k_max))
    tally: Counter = Counter()
    per_k: Counter = Counter()
    for seed in range(cfg.first_seed, cfg.first_seed + cfg.seeds):
        F = random_system(cfg.degrees, seed)
        for p in params:
            rep = verify_identity(F, p)
            outcome = "degenerate" if rep.degenerate else ("equal" if rep.equal else "FAIL")
            tally[outcome] += 1
            per_k[(p.k, p.i, outcome)] += 1
    return tally, per_k, len(params)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", default="5,5,6")
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--first-seed", type=int, default=0)
    ap.add_argument("--k-max", type=int, default=3)
    a = ap.parse_args()
    cfg = SweepConfig(tuple(int(x) for x in a.degrees.split(",")), a.seeds, a.first_seed, a.k_max)

    t0 = time.perf_counter()
    tally, per_k, nparams = run(cfg)
    dt = time.perf_counter() - t0
    print(f"degrees={cfg.degrees} seeds={cfg.seeds} triples={nparams} time={dt:.2f}s")
    print(f"{'k':>3} {'i':>3} {'equal':>7} {'degen':>7} {'FAIL':>6}")
    for k, i in sorted({(k, i) for k, i, _ in per_k}):
        print(f"{k:>3} {i:>3} {per_k[(k, i, 'equal')]:>7} "
              f"{per_k[(k, i, 'degenerate')]:>7} {per_k[(k, i, 'FAIL')]:>6}")
    print("total:", dict(tally))


if __name__ == "__main__":
    main()

"""Bit size of R_u versus the nested cluster subresultant before division.

Shows how much of the nested determinant is the spurious factor r_{w0}^eps.

    python3 scripts/coeff_growth.py --degrees 5,5,6 --seeds 10
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from statistics import mean

from habicht.instances import random_system
from habicht.subresultant import subresultant
from habicht.theorem import iter_params, rhs


@dataclass(frozen=True)
class GrowthConfig:
    degrees: tuple[int, ...] = (5, 5, 6)
    seeds: int = 10
    k_max: int | None = 3


def bits(p) -> int:
    return max((abs(c).bit_length() for c in p.coeffs), default=0)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", default="5,5,6")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--k-max", type=int, default=3)
    a = ap.parse_args()
    cfg = GrowthConfig(tuple(int(x) for x in a.degrees.split(",")), a.seeds, a.k_max)

    rows: dict = {}
    for seed in range(cfg.seeds):
        F = random_system(cfg.degrees, seed)
        for p in iter_params(cfg.degrees, cfg.k_max):
            direct = subresultant(F, p.u).poly
            nested = rhs(F, p, strict=False)
            rows.setdefault((p.w0, p.k, p.i, p.epsilon), []).append((bits(direct), bits(nested)))

    print(f"{'w0':>10} {'k':>2} {'i':>2} {'eps':>4} {'bits R_u':>9} {'bits nested':>12} {'excess':>7}")
    for (w0, k, i, eps), vals in sorted(rows.items(), key=lambda kv: (kv[0][1], kv[0][2], kv[0][0])):
        d, n = mean(v[0] for v in vals), mean(v[1] for v in vals)
        print(f"{str(w0):>10} {k:>2} {i:>2} {eps:>4} {d:>9.1f} {n:>12.1f} {n - d:>7.1f}")


if __name__ == "__main__":
    main()

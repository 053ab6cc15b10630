"""Instance files and seeded random systems.

An instance file is JSON ``{"polys": [[a_00, ..., a_0d0], ...]}`` with
coefficients in ascending order. ``seed`` and ``degrees`` keys are
optional and informational.

Random coefficients come from numpy's PCG64 bit generator. Only its raw
64-bit output stream is used (mapped to the coefficient range by
rejection sampling), so a seed produces the same instance regardless of
numpy's higher-level sampling routines.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

import numpy as np

from .poly import Poly
from .subresultant import PolySystem

__all__ = [
    "CoeffSource",
    "random_poly",
    "random_system",
    "random_systems",
    "parse_instance",
    "load_instance",
    "load_polys",
    "dump_instance",
    "COEFF_BOUND",
]

COEFF_BOUND = 99


class CoeffSource:
    """Uniform integers from the raw PCG64 stream."""

    def __init__(self, seed: int):
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self._bits = np.random.PCG64(seed)

    def _raw(self) -> int:
        return int(self._bits.random_raw())

    def uniform(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], unbiased."""
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self._raw()
            if x < limit:
                return lo + x % span

    def nonzero(self, bound: int) -> int:
        x = self.uniform(-bound, bound - 1)
        return x + 1 if x >= 0 else x


def random_poly(src: CoeffSource, degree: int, monic: bool = False,
                bound: int = COEFF_BOUND) -> Poly:
    lower = [src.uniform(-bound, bound) for _ in range(degree)]
    lead = 1 if monic else src.nonzero(bound)
    return Poly(lower + [lead])


def random_system(d: Sequence[int], seed: int, bound: int = COEFF_BOUND) -> PolySystem:
    return random_systems(d, seed, 1, bound)[0]


def random_systems(d: Sequence[int], seed: int, trials: int,
                   bound: int = COEFF_BOUND) -> list[PolySystem]:
    """``trials`` systems of degree vector ``d`` drawn from one stream."""
    d = list(d)
    if len(d) < 2 or min(d) < 0:
        raise ValueError(f"bad degree vector {d}")
    if any(x < d[0] for x in d[1:]):
        raise ValueError(f"d_0 must be minimal, got {d}")
    src = CoeffSource(seed)
    out = []
    for _ in range(trials):
        polys = [random_poly(src, d[0], monic=True, bound=bound)]
        polys += [random_poly(src, di, bound=bound) for di in d[1:]]
        out.append(PolySystem(tuple(polys)))
    return out


def _coeff_lists(obj) -> list[list[int]]:
    if not isinstance(obj, dict) or "polys" not in obj:
        raise ValueError('instance must be a JSON object with a "polys" key')
    polys = obj["polys"]
    if not isinstance(polys, list) or not polys:
        raise ValueError('"polys" must be a nonempty list')
    for i, c in enumerate(polys):
        if not isinstance(c, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in c):
            raise ValueError(f"polynomial {i} must be a list of integers")
    return polys


def load_polys(text: str) -> list[Poly]:
    """Parse only the polynomial list (no system invariants checked)."""
    return [Poly(c) for c in _coeff_lists(json.loads(text))]


def parse_instance(text: str) -> PolySystem:
    obj = json.loads(text)
    polys = _coeff_lists(obj)
    return PolySystem.from_coeffs(polys, obj.get("degrees"))


def load_instance(path: str | Path) -> PolySystem:
    return parse_instance(Path(path).read_text())


def dump_instance(F: PolySystem, seed: int | None = None) -> dict:
    obj: dict = {"polys": [list(p.coeffs) for p in F.polys], "degrees": list(F.degrees)}
    if seed is not None:
        obj["seed"] = seed
    return obj

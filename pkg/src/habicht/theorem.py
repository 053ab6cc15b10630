"""Generalized Habicht identity: parameters, both sides, verification.

For a cluster base ``w0``, ``k >= 1`` and ``0 <= i <= n``::

    w_j = w0 + e_j,  v = (k,...,k) + e_i,  u = w0 + v,  eps = |v + e_i| + k - 2

    r_{w0}(F)^eps * R_u(F) == R_v(R_{w0}(F), R_{w1}(F), ..., R_{wn}(F))

The identity is polynomial in the coefficients of F. At an integer
specialization the inner subresultants may lose degree; the outer
subresultant is then evaluated at the generic (formal) degrees and the
drop is recorded in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .poly import Poly
from .subresultant import (
    Index,
    InvalidIndexError,
    PolySystem,
    SubresultantValue,
    add_index,
    subresultant,
    subresultant_of,
    unit,
)

__all__ = [
    "HabichtParams",
    "VerificationReport",
    "InductionReport",
    "DegenerateClusterError",
    "derive_params",
    "cluster",
    "cluster_degree_drops",
    "lhs",
    "rhs",
    "verify_identity",
    "verify_induction_equations",
    "iter_params",
]


class DegenerateClusterError(ArithmeticError):
    """An inner subresultant fell below its generic degree."""

    def __init__(self, drops: Sequence[Index]):
        self.drops = list(drops)
        super().__init__(f"degree drop in cluster members {self.drops}")


@dataclass(frozen=True)
class HabichtParams:
    """One instance of the identity.

    Built by :func:`derive_params`; the constructor itself does not
    re-validate, so negative controls can ``dataclasses.replace`` a field.
    """

    w0: Index
    k: int
    i: int
    w: tuple[Index, ...]
    v: Index
    u: Index
    epsilon: int

    @property
    def n(self) -> int:
        return len(self.w0)

    @property
    def members(self) -> tuple[Index, ...]:
        """Cluster indices w0, w0 + e_1, ..., w0 + e_n."""
        return (self.w0,) + self.w

    def as_dict(self) -> dict:
        return {
            "w0": list(self.w0), "k": self.k, "i": self.i,
            "w": [list(x) for x in self.w], "v": list(self.v),
            "u": list(self.u), "epsilon": self.epsilon,
        }


def derive_params(d: Sequence[int], w0: Sequence[int], k: int, i: int) -> HabichtParams:
    d = tuple(d)
    n = len(d) - 1
    w0 = tuple(int(x) for x in w0)
    if n < 1:
        raise ValueError("need at least two polynomials")
    if len(w0) != n:
        raise InvalidIndexError(f"w0={w0} has length {len(w0)}, expected {n}")
    if any(x < 0 for x in w0):
        raise InvalidIndexError(f"w0={w0} has a negative entry")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 0 <= i <= n:
        raise ValueError(f"i must lie in [0, {n}], got {i}")
    e_i = unit(n, i)
    v = add_index((k,) * n, e_i)
    u = add_index(w0, v)
    if sum(u) > d[0]:
        raise InvalidIndexError(f"u={u} not in P({d[0]}, {n}): |u| = {sum(u)}")
    w = tuple(add_index(w0, unit(n, j)) for j in range(1, n + 1))
    epsilon = sum(add_index(v, e_i)) + k - 2
    return HabichtParams(w0, k, i, w, v, u, epsilon)


def iter_params(d: Sequence[int], k_max: int | None = None) -> Iterator[HabichtParams]:
    """Every (w0, k, i) with u in P(d_0, n), ordered by k, then i, then w0 ascending."""
    d0, n = d[0], len(d) - 1
    k = 1
    while n * k <= d0 and (k_max is None or k <= k_max):
        for i in range(n + 1):
            budget = d0 - n * k - (1 if i else 0)
            if budget < 0:
                continue
            for w0 in _indices_up_to(n, budget):
                yield derive_params(d, w0, k, i)
        k += 1


def _indices_up_to(n: int, total: int) -> list[Index]:
    out = [()]
    for _ in range(n):
        out = [t + (x,) for t in out for x in range(total + 1)]
    return sorted(t for t in out if sum(t) <= total)


@lru_cache(maxsize=4096)
def _sres(F: PolySystem, delta: Index) -> SubresultantValue:
    return subresultant(F, delta)


def generic_degree(F: PolySystem, delta: Sequence[int]) -> int:
    return F.d0 - sum(delta)


def cluster(F: PolySystem, w0: Sequence[int]) -> list[SubresultantValue]:
    w0 = tuple(w0)
    return [_sres(F, add_index(w0, unit(F.n, j))) for j in range(F.n + 1)]


def cluster_degree_drops(F: PolySystem, p: HabichtParams) -> list[Index]:
    drops = []
    for idx, val in zip(p.members, cluster(F, p.w0)):
        g = generic_degree(F, idx)
        if not val.poly or val.poly.degree != g:
            drops.append(idx)
    return drops


def lhs(F: PolySystem, p: HabichtParams) -> Poly:
    r = _sres(F, p.w0).principal
    return _sres(F, tuple(p.u)).poly.scale(r ** p.epsilon)


def rhs(F: PolySystem, p: HabichtParams, strict: bool = True) -> Poly:
    """R_v of the cluster at w0.

    With ``strict`` a degree drop in the cluster raises
    :class:`DegenerateClusterError`; otherwise the members are placed
    at their generic degrees.
    """
    if strict:
        drops = cluster_degree_drops(F, p)
        if drops:
            raise DegenerateClusterError(drops)
    members = cluster(F, p.w0)
    degrees = [generic_degree(F, idx) for idx in p.members]
    return subresultant_of([m.poly for m in members], p.v, degrees=degrees).poly


@dataclass(frozen=True)
class VerificationReport:
    params: HabichtParams
    lhs: Poly
    rhs: Poly
    equal: bool
    degree_drops: list[Index] = field(default_factory=list)

    @property
    def degenerate(self) -> bool:
        return bool(self.degree_drops)

    def as_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "equal": self.equal,
            "degenerate": self.degenerate,
            "degree_drops": [list(x) for x in self.degree_drops],
            "lhs": list(self.lhs.coeffs),
            "rhs": list(self.rhs.coeffs),
        }


def verify_identity(F: PolySystem, p: HabichtParams) -> VerificationReport:
    """Evaluate both sides exactly.

    A degenerate specialization is still evaluated (with formal
    degrees) but flagged through ``degree_drops``; callers decide
    whether it counts.
    """
    if len(p.w0) != F.n:
        raise InvalidIndexError(f"parameters are for n={len(p.w0)}, system has n={F.n}")
    if sum(p.u) > F.d0:
        raise InvalidIndexError(f"u={p.u} not in P({F.d0}, {F.n})")
    drops = cluster_degree_drops(F, p)
    left = lhs(F, p)
    right = rhs(F, p, strict=False)
    return VerificationReport(p, left, right, left == right, drops)


@dataclass(frozen=True)
class InductionReport:
    w0: Index
    j: int
    reports: tuple[VerificationReport, ...]

    @property
    def equal(self) -> bool:
        return all(r.equal for r in self.reports)

    @property
    def exponents(self) -> dict[int, int]:
        return {r.params.i: r.params.epsilon for r in self.reports}


def verify_induction_equations(F: PolySystem, w0: Sequence[int], j: int) -> InductionReport:
    """Both equation families at k = j.

    r^((n+1)j-2) R_{w0+j'} = R_{j'}(cluster) and, for every i > 0 with
    w0 + j' + e_i in range, r^((n+1)j) R_{w0+j'+e_i} = R_{j'+e_i}(cluster).
    """
    d = F.degrees
    base = derive_params(d, w0, j, 0)
    assert base.epsilon == (F.n + 1) * j - 2
    reports = [verify_identity(F, base)]
    for i in range(1, F.n + 1):
        try:
            p = derive_params(d, w0, j, i)
        except InvalidIndexError:
            continue
        assert p.epsilon == (F.n + 1) * j
        reports.append(verify_identity(F, p))
    return InductionReport(tuple(w0), j, tuple(reports))

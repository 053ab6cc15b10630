"""Subresultants of several univariate polynomials.

For ``F = (F_0, ..., F_n)`` and an index ``delta = (delta_1, ..., delta_n)``
with ``|delta| <= d_0`` the delta-subresultant is the determinant
polynomial of the stacked shifted blocks

    x^(delta_i - 1) F_i, ..., x^0 F_i        (i = 0..n)

where the size ``delta_0`` of the F_0 block is chosen from the column
count of the other blocks. Its principal coefficient is the coefficient
of ``x^(d_0 - |delta|)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from .detpoly import ShapeError, dp_linear_combination, dp_list
from .poly import Poly

__all__ = [
    "PolySystem",
    "SubresultantValue",
    "InvalidIndexError",
    "enumerate_index_set",
    "col_count",
    "delta0",
    "shifted_family",
    "subresultant",
    "subresultant_of",
    "subres_two",
    "IdealDecomposition",
    "ideal_membership_decompose",
    "unit",
    "add_index",
]

Index = tuple[int, ...]


class InvalidIndexError(ValueError):
    """Index vector outside P(d_0, n) or of the wrong length."""


def unit(n: int, i: int) -> Index:
    """The i-th unit vector of length n; i = 0 gives the zero vector."""
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def add_index(a: Sequence[int], b: Sequence[int]) -> Index:
    return tuple(x + y for x, y in zip(a, b, strict=True))


@dataclass(frozen=True)
class PolySystem:
    """A list F_0, ..., F_n with F_0 monic of minimal degree."""

    polys: tuple[Poly, ...]

    def __post_init__(self):
        polys = tuple(p if isinstance(p, Poly) else Poly(p) for p in self.polys)
        object.__setattr__(self, "polys", polys)
        if len(polys) < 2:
            raise ValueError("a system needs at least two polynomials")
        for i, p in enumerate(polys):
            if not p:
                raise ValueError(f"F_{i} is the zero polynomial")
        d = self.degrees
        if any(di < d[0] for di in d[1:]):
            raise ValueError(f"F_0 must have minimal degree, got degrees {d}")
        if polys[0].leading_coeff != 1:
            raise ValueError(f"F_0 must be monic, leading coefficient is {polys[0].leading_coeff}")

    @classmethod
    def from_coeffs(cls, coeff_lists: Sequence[Sequence[int]],
                    degrees: Sequence[int] | None = None) -> PolySystem:
        polys = tuple(Poly(c) for c in coeff_lists)
        if degrees is not None:
            if len(degrees) != len(polys):
                raise ValueError("degree vector length does not match the number of polynomials")
            for i, (p, dg) in enumerate(zip(polys, degrees)):
                if not p or p.degree != dg:
                    actual = p.degree if p else None
                    raise ValueError(f"F_{i} has degree {actual}, stated {dg}")
        return cls(polys)

    @property
    def n(self) -> int:
        return len(self.polys) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.polys)

    @property
    def d0(self) -> int:
        return self.polys[0].degree

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i: int) -> Poly:
        return self.polys[i]


@dataclass(frozen=True)
class SubresultantValue:
    poly: Poly
    principal: int
    delta0: int


def enumerate_index_set(d0: int, n: int) -> list[Index]:
    """All delta in N^n with |delta| <= d0, by total descending then lex descending."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out: list[Index] = []
    for total in range(d0, -1, -1):
        level = []
        # compositions of `total` into n parts
        for bars in combinations_with_replacement(range(total + 1), n - 1):
            cuts = (0,) + bars + (total,)
            level.append(tuple(cuts[j + 1] - cuts[j] for j in range(n)))
        level.sort(reverse=True)
        out.extend(level)
    return out


def _check_index(delta: Sequence[int], n: int, d0: int) -> Index:
    delta = tuple(int(x) for x in delta)
    if len(delta) != n:
        raise InvalidIndexError(f"index {delta} has length {len(delta)}, expected {n}")
    if any(x < 0 for x in delta):
        raise InvalidIndexError(f"index {delta} has a negative entry")
    if sum(delta) > d0:
        raise InvalidIndexError(f"|{delta}| = {sum(delta)} exceeds d_0 = {d0}")
    return delta


def _col_count(degrees: Sequence[int], delta: Sequence[int]) -> int:
    # columns of cm(x^(delta_i-1) F_i, ...), i >= 1; empty blocks contribute nothing
    widths = [d + k for d, k in zip(degrees[1:], delta) if k > 0]
    return max(widths, default=0)


def _delta0(degrees: Sequence[int], delta: Sequence[int]) -> int:
    c = _col_count(degrees, delta)
    d0 = degrees[0]
    return c - d0 if c >= d0 else 1


def col_count(F: PolySystem, delta: Sequence[int]) -> int:
    delta = _check_index(delta, F.n, F.d0)
    return _col_count(F.degrees, delta)


def delta0(F: PolySystem, delta: Sequence[int]) -> int:
    delta = _check_index(delta, F.n, F.d0)
    return _delta0(F.degrees, delta)


def shifted_family(polys: Sequence[Poly], sizes: Sequence[int],
                   degrees: Sequence[int] | None = None):
    """Rows x^(s-1) P, ..., x^0 P for each (P, s); returns (rows, formal row degrees, labels)."""
    if degrees is None:
        degrees = [p.degree for p in polys]
    rows, degs, labels = [], [], []
    for i, (p, s, dg) in enumerate(zip(polys, sizes, degrees, strict=True)):
        for j in range(s - 1, -1, -1):
            rows.append(p.shift(j))
            degs.append(dg + j)
            labels.append((i, j))
    return rows, degs, labels


def subresultant_of(polys: Sequence[Poly], delta: Sequence[int],
                    degrees: Sequence[int] | None = None) -> SubresultantValue:
    """delta-subresultant of an arbitrary list, no ordering or monicity assumed.

    ``degrees`` supplies formal degrees (used when members have
    specialised to a lower degree than the generic one). The principal
    coefficient is read at ``degrees[0] - |delta|``.
    """
    polys = list(polys)
    if degrees is None:
        for i, p in enumerate(polys):
            if not p:
                raise ShapeError(f"member {i} is the zero polynomial; pass formal degrees")
        degrees = [p.degree for p in polys]
    degrees = list(degrees)
    n = len(polys) - 1
    delta = _check_index(delta, n, degrees[0])
    d0_block = _delta0(degrees, delta)
    rows, degs, _ = shifted_family(polys, (d0_block,) + delta, degrees)
    if len(rows) > max(degs) + 1:
        raise ShapeError(f"tall coefficient matrix for delta={delta}")
    R = dp_list(rows, degrees=degs)
    return SubresultantValue(R, R.coeff(degrees[0] - sum(delta)), d0_block)


def subresultant(F: PolySystem, delta: Sequence[int]) -> SubresultantValue:
    return subresultant_of(F.polys, delta)


def subres_two(F0: Poly, F1: Poly, k: int) -> SubresultantValue:
    """k-subresultant of two polynomials in the (d_0 - k) re-indexing.

    The returned ``delta0`` is the size of the F_0 block (0 for k = 0).
    """
    d0, d1 = F0.degree, F1.degree
    if d0 > d1:
        raise ValueError(f"need deg F0 <= deg F1, got {d0} > {d1}")
    if not 0 <= k <= d0:
        raise InvalidIndexError(f"k={k} outside [0, {d0}]")
    if k == 0:
        if d0 == d1:
            raise ValueError("R_0 needs deg F0 != deg F1")
        R = F0.scale(F0.leading_coeff ** (d1 - d0 - 1))
        return SubresultantValue(R, R.coeff(d0), 0)
    n0 = d1 - (d0 - k)
    rows = [F0.shift(j) for j in range(n0 - 1, -1, -1)]
    rows += [F1.shift(j) for j in range(k - 1, -1, -1)]
    R = dp_list(rows)
    return SubresultantValue(R, R.coeff(d0 - k), n0)


@dataclass(frozen=True)
class IdealDecomposition:
    """R_delta = sum c[i][j] x^j F_i, with ``c[i]`` indexed by shift j."""

    delta: Index
    delta0: int
    coeffs: tuple[tuple[int, ...], ...]
    subresultant: Poly

    def reconstruct(self, F: PolySystem) -> Poly:
        acc = Poly()
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    acc = acc + F[i].shift(j).scale(c)
        return acc

    def leading_cofactor(self, i: int) -> int:
        """c_{i, delta_i - 1} for a block i >= 1."""
        return self.coeffs[i][self.delta[i - 1] - 1]


def ideal_membership_decompose(F: PolySystem, delta: Sequence[int]) -> IdealDecomposition:
    """Cofactors exhibiting R_delta(F) in the ideal generated by F."""
    delta = _check_index(delta, F.n, F.d0)
    b0 = _delta0(F.degrees, delta)
    sizes = (b0,) + delta
    rows, degs, labels = shifted_family(F.polys, sizes)
    cs = dp_linear_combination(rows, degs)
    coeffs = [[0] * s for s in sizes]
    for (i, j), c in zip(labels, cs):
        coeffs[i][j] = c
    R = dp_list(rows, degrees=degs)
    return IdealDecomposition(delta, b0, tuple(tuple(r) for r in coeffs), R)

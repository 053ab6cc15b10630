"""Coefficient matrices, determinant polynomials and exact determinants.

For a p x q integer matrix ``M`` with ``p <= q`` the determinant
polynomial is

    dp(M) = sum_{j=0}^{q-p} det[M_1 ... M_{p-1} M_{q-j}] x^j

(columns 1-indexed). ``pcdp(M)`` is its coefficient of ``x^(q-p)``, the
determinant of the leading p x p block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .poly import Poly

__all__ = [
    "CoeffMatrix",
    "ShapeError",
    "det_bareiss",
    "det_cofactor",
    "dp_matrix",
    "pcdp_matrix",
    "build_cm",
    "dp_list",
    "pcdp_list",
    "dp_linear_combination",
    "BlockLemmaResult",
    "block_lemma_case",
    "check_block_lemma",
]

COFACTOR_CAP = 10


class ShapeError(ValueError):
    """Matrix or polynomial family has a shape the operation does not accept."""


@dataclass(frozen=True)
class CoeffMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(a) for a in row) for row in self.entries)
        if not entries or not entries[0]:
            raise ShapeError("matrix must have at least one row and one column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> CoeffMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def select_columns(self, cols: Sequence[int]) -> CoeffMatrix:
        return CoeffMatrix(tuple(tuple(row[c] for c in cols) for row in self.entries))

    def swap_columns(self, a: int, b: int) -> CoeffMatrix:
        order = list(range(self.cols))
        order[a], order[b] = order[b], order[a]
        return self.select_columns(order)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def _as_rows(M) -> tuple[tuple[int, ...], ...]:
    if isinstance(M, CoeffMatrix):
        return M.entries
    return CoeffMatrix.of(M).entries


def det_bareiss(M) -> int:
    """Determinant by fraction-free (Bareiss) elimination.

    Every division performed is exact over the integers; a row swap
    is used whenever the pivot vanishes.
    """
    rows = _as_rows(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeError(f"determinant of a non-square {n}x{len(rows[0])} matrix")
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_cofactor(M, cap: int = COFACTOR_CAP) -> int:
    """Determinant by Laplace expansion along successive rows.

    Minors are keyed by the set of columns still available, so the
    expansion visits each minor once (O(2^n n) work instead of n!).
    Intended as an independent oracle for :func:`det_bareiss`.
    """
    rows = _as_rows(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeError(f"determinant of a non-square {n}x{len(rows[0])} matrix")
    if n > cap:
        raise ShapeError(f"cofactor expansion capped at {cap}x{cap}, got {n}x{n}")

    @lru_cache(maxsize=None)
    def minor(free: int) -> int:
        # row index is the number of columns already consumed
        r = n - bin(free).count("1")
        if r == n:
            return 1
        total = 0
        parity = 0
        for c in range(n):
            bit = 1 << c
            if free & bit:
                entry = rows[r][c]
                if entry:
                    term = entry * minor(free & ~bit)
                    total += -term if parity else term
                parity ^= 1
        return total

    return minor((1 << n) - 1)


DetKernel = Callable[[object], int]


def dp_matrix(M, det: DetKernel = det_bareiss) -> Poly:
    """Determinant polynomial of a square or wide matrix."""
    rows = _as_rows(M)
    p, q = len(rows), len(rows[0])
    if p > q:
        raise ShapeError(f"dp needs a square or wide matrix, got {p}x{q}")
    lead = list(range(p - 1))
    coeffs = []
    for j in range(q - p + 1):
        cols = lead + [q - 1 - j]
        coeffs.append(det([[row[c] for c in cols] for row in rows]))
    return Poly(coeffs)


def pcdp_matrix(M, det: DetKernel = det_bareiss) -> int:
    rows = _as_rows(M)
    p, q = len(rows), len(rows[0])
    if p > q:
        raise ShapeError(f"pcdp needs a square or wide matrix, got {p}x{q}")
    return det([row[:p] for row in rows])


def _cm_rows(polys: Sequence[Poly], degrees: Sequence[int] | None = None) -> list[list[int]]:
    """Rows of the coefficient matrix, highest power first.

    ``degrees`` overrides the actual degrees with formal ones (each at
    least the true degree), which lets zero or degree-dropped members
    keep their generic column alignment.
    """
    if degrees is None:
        degrees = [p.degree for p in polys]
    m = max(degrees)
    rows = []
    for p, dg in zip(polys, degrees):
        if p and p.degree > dg:
            raise ShapeError(f"formal degree {dg} below actual degree {p.degree}")
        rows.append([p.coeff(m - j) for j in range(m + 1)])
    return rows


def build_cm(P: Sequence[Poly]) -> CoeffMatrix:
    """Coefficient matrix of a list of polynomials (t rows, max degree + 1 columns)."""
    if not P:
        raise ShapeError("coefficient matrix of an empty family")
    for i, p in enumerate(P):
        if not p:
            raise ShapeError(f"zero polynomial at position {i}")
    return CoeffMatrix.of(_cm_rows(P))


def dp_list(P: Sequence[Poly], degrees: Sequence[int] | None = None,
            det: DetKernel = det_bareiss) -> Poly:
    """dp of the coefficient matrix of ``P``; see :func:`_cm_rows` for ``degrees``."""
    if degrees is None:
        return dp_matrix(build_cm(P), det)
    if not P:
        raise ShapeError("coefficient matrix of an empty family")
    return dp_matrix(_cm_rows(P, degrees), det)


def pcdp_list(P: Sequence[Poly], degrees: Sequence[int] | None = None,
              det: DetKernel = det_bareiss) -> int:
    if degrees is None:
        return pcdp_matrix(build_cm(P), det)
    return pcdp_matrix(_cm_rows(P, degrees), det)


def dp_linear_combination(P: Sequence[Poly], degrees: Sequence[int] | None = None) -> list[int]:
    """Cofactors c_i with dp(P) = sum_i c_i P_i.

    c_i is 1 when P has one member, 0 when P_i alone attains the
    maximal degree, and otherwise (-1)^(t+i) pcdp of P without P_i
    (i counted from 1).
    """
    t = len(P)
    if not t:
        raise ShapeError("empty family")
    if degrees is None:
        for i, p in enumerate(P):
            if not p:
                raise ShapeError(f"zero polynomial at position {i}")
        degrees = [p.degree for p in P]
    m = max(degrees)
    if t > m + 1:
        raise ShapeError(f"tall coefficient matrix: {t} rows, {m + 1} columns")
    if t == 1:
        return [1]
    out = []
    for i in range(t):
        others = [dg for j, dg in enumerate(degrees) if j != i]
        if all(dg < degrees[i] for dg in others):
            out.append(0)
            continue
        rest = [p for j, p in enumerate(P) if j != i]
        sign = -1 if (t + i + 1) % 2 else 1
        # the rest keeps the full width, so its leading block is the cofactor minor
        rows = _cm_rows(rest, others)
        out.append(sign * pcdp_matrix(rows))
    return out


@dataclass(frozen=True)
class BlockLemmaResult:
    case: int
    lhs: Poly
    rhs: Poly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def block_lemma_case(m1: int, t1: int, m2: int, t2: int) -> int:
    """Which branch of the block reduction applies to dp(P, Q)."""
    if not (t1 >= 1 and t2 >= 1):
        raise ShapeError("both blocks must be nonempty")
    if m1 < m2:
        raise ShapeError(f"need max deg P >= max deg Q, got {m1} < {m2}")
    if t1 + t2 > m1 + 1:
        raise ShapeError("combined coefficient matrix is tall")
    if m2 > m1 - t1 + 1:
        raise ShapeError(f"need max deg Q <= {m1 - t1 + 1}, got {m2}")
    if m2 == m1 - t1 + 1:
        return 1
    if m2 == m1 - t1 or t2 == 1:
        return 2
    return 3


def check_block_lemma(P: Sequence[Poly], Q: Sequence[Poly]) -> BlockLemmaResult:
    """Evaluate both sides of the dp(P, Q) block reduction."""
    for p in list(P) + list(Q):
        if not p:
            raise ShapeError("zero polynomial in block")
    m1 = max(p.degree for p in P)
    m2 = max(q.degree for q in Q)
    case = block_lemma_case(m1, len(P), m2, len(Q))
    lhs = dp_list(list(P) + list(Q))
    if case == 1:
        inner = dp_list(P)
        # dp(P) keeps its formal degree m1 - t1 + 1 even if it degenerates
        degs = [m1 - len(P) + 1] + [q.degree for q in Q]
        rhs = dp_list([inner] + list(Q), degrees=degs)
    elif case == 2:
        rhs = dp_list(Q).scale(pcdp_list(P))
    else:
        rhs = Poly()
    return BlockLemmaResult(case, lhs, rhs)

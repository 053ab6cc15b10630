"""Dense univariate polynomials over the integers.

Coefficients are plain Python ints, so every operation is exact. A
``Poly`` stores its coefficients in ascending order of degree and is
always trimmed: the zero polynomial is the empty tuple and a nonzero
polynomial never carries a zero leading coefficient.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Sequence

__all__ = [
    "Poly",
    "ZeroPolynomialError",
    "poly_add",
    "poly_mul",
    "poly_shift",
    "coeff_at",
]


class ZeroPolynomialError(ValueError):
    """Raised when a degree-dependent quantity is requested of the zero polynomial."""


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(int(c) for c in coeffs[:end])


class Poly:
    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Poly:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> Poly:
        return cls([c])

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading_coeff(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, j: int) -> int:
        if j < 0:
            raise ValueError("negative exponent")
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def shift(self, j: int) -> Poly:
        """Return ``x**j * self``."""
        if j < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly((0,) * j + self.coeffs)

    def scale(self, c: int) -> Poly:
        return Poly([c * a for a in self.coeffs])

    def exact_div(self, c: int) -> Poly:
        """Divide every coefficient by the integer ``c``; the division must be exact."""
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        out = []
        for a in self.coeffs:
            q, r = divmod(a, c)
            if r:
                raise ArithmeticError(f"{c} does not divide coefficient {a}")
            out.append(q)
        return Poly(out)

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> Poly:
        return Poly.constant(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if j == 1 else f"x^{j}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_shift(p: Poly, j: int) -> Poly:
    return p.shift(j)


def coeff_at(p: Poly, j: int) -> int:
    return p.coeff(j)

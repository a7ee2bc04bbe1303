"""Exact arithmetic in the coefficient ring Z[h].

Polynomials in the formal parameter h with arbitrary-precision integer
coefficients, stored little-endian (``coeffs[k]`` is the coefficient of
h^k).  The canonical zero is the empty coefficient tuple, and no stored
tuple has a trailing zero, so structural equality and hashing are exact
element equality.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, "IntPoly"]


class NonExactDivision(ArithmeticError):
    """Raised when a division that must be exact in Z[h] is not."""


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """An element of Z[h]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim([int(c) for c in coeffs])

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(n: int) -> "IntPoly":
        return IntPoly((n,))

    @staticmethod
    def monomial(coeff: int, power: int) -> "IntPoly":
        if coeff == 0:
            return ZERO
        return IntPoly((0,) * power + (coeff,))

    @staticmethod
    def coerce(value: Scalar) -> "IntPoly":
        if isinstance(value, IntPoly):
            return value
        return IntPoly.const(value)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree in h; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def height(self) -> int:
        """Max absolute value of the coefficients (0 for zero)."""
        return max((abs(c) for c in self.coeffs), default=0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: Scalar) -> "IntPoly":
        other = IntPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: Scalar) -> "IntPoly":
        return self + (-IntPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "IntPoly":
        return IntPoly.coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "IntPoly":
        other = IntPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def divexact(self, divisor: "IntPoly") -> "IntPoly":
        """Exact quotient q with q * divisor == self.

        Raises NonExactDivision when the divisor is zero or does not
        divide exactly; such a failure inside an elimination indicates a
        pivoting bug, not a data problem.
        """
        if divisor.is_zero():
            raise NonExactDivision("division by zero in Z[h]")
        if self.is_zero():
            return ZERO
        rem = list(self.coeffs)
        div = divisor.coeffs
        ddeg = len(div) - 1
        lead = div[-1]
        qdeg = len(rem) - 1 - ddeg
        if qdeg < 0:
            raise NonExactDivision(f"{self!r} not divisible by {divisor!r}")
        out = [0] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            top = rem[k + ddeg]
            if top % lead != 0:
                raise NonExactDivision(f"{self!r} not divisible by {divisor!r}")
            q = top // lead
            out[k] = q
            if q:
                for i, c in enumerate(div):
                    rem[k + i] -= q * c
        if any(rem):
            raise NonExactDivision(f"{self!r} not divisible by {divisor!r}")
        return IntPoly(out)

    def __call__(self, point: Union[int, Fraction]) -> Union[int, Fraction]:
        """Evaluate at h = point, exactly (Horner)."""
        acc: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # -- io -------------------------------------------------------------

    def to_json(self) -> list[str]:
        """Little-endian array of decimal strings, e.g. h + 2 -> ["2","1"]."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data: Iterable[str]) -> "IntPoly":
        return IntPoly([int(s) for s in data])

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                pow_s = "h" if k == 1 else f"h^{k}"
                body = pow_s if abs(c) == 1 else f"{abs(c)}*{pow_s}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ZERO = IntPoly()
ONE = IntPoly((1,))
HBAR = IntPoly((0, 1))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def poly_eval(a: IntPoly, point: Union[int, Fraction]) -> Union[int, Fraction]:
    return a(point)


def poly_divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    return a.divexact(b)

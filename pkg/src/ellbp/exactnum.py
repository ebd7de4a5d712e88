"""Exact rational arithmetic, dense univariate polynomials and truncated
power series.

Everything in this module is exact: coefficients are `fractions.Fraction`,
no floating point is ever introduced.  Polynomials are stored as dense
ascending-degree coefficient tuples with trailing zeros stripped (the zero
polynomial is the empty tuple).  Truncated series carry an explicit
inclusive truncation order; binary operations truncate to the minimum of
the operand orders, so an order-n result is trustworthy through z^n by
construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class PoleInBottomParameter(ArithmeticError):
    """The bottom parameter of a hypergeometric series hits a pole."""


class DivisionByZeroConstantTerm(ZeroDivisionError):
    """Series division by a series with zero constant term."""


def rat(value: RationalLike, den: int | None = None) -> Fraction:
    """Build a Fraction from an int, a "num/den" string or a (num, den) pair."""
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Serialize a rational as "num/den", omitting "/den" when it is 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    return Fraction(text.strip())


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1); the empty product for n = 0."""
    if n < 0:
        raise ValueError(f"pochhammer needs n >= 0, got {n}")
    a = Fraction(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def harmonic_number(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n (H_0 = 0)."""
    if n < 0:
        raise ValueError(f"harmonic_number needs n >= 0, got {n}")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


class Poly:
    """Dense univariate polynomial over the rationals, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly([1])

    @staticmethod
    def x() -> "Poly":
        """The monomial z."""
        return Poly([0, 1])

    @staticmethod
    def monomial(k: int, coeff: RationalLike = 1) -> "Poly":
        return Poly([0] * k + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] - other[k] for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly | RationalLike") -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        c = Fraction(other)
        return Poly([a * c for a in self.coeffs])

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """Multiply by z^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if self.is_zero():
            return Poly()
        return Poly((Fraction(0),) * k + self.coeffs)

    def divide_by_x(self) -> "Poly":
        """Exact division by z; requires zero constant term."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("polynomial has nonzero constant term")
        return Poly(self.coeffs[1:])

    def divexact_linear(self, mu: RationalLike) -> "Poly":
        """Exact division by (z - mu); the remainder must vanish."""
        mu = Fraction(mu)
        if self.is_zero():
            return Poly()
        out = [Fraction(0)] * len(self.coeffs)
        rem = Fraction(0)
        # synthetic division: out[k] becomes the z^k quotient coefficient
        for k in range(len(self.coeffs) - 1, -1, -1):
            out[k] = rem
            rem = self.coeffs[k] + mu * rem
        if rem != 0:
            raise ValueError(f"division by (z - {mu}) leaves remainder {rem}")
        return Poly(out)

    def reverse(self, degree: int | None = None) -> "Poly":
        """Coefficient reversal z^d * p(1/z) for d = degree (default deg p)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below actual degree")
        return Poly([self[d - k] for k in range(d + 1)])

    def __call__(self, x):
        """Horner evaluation; exact for Fraction x, numeric otherwise."""
        if isinstance(x, int):
            x = Fraction(x)
        acc = Fraction(0) if isinstance(x, Fraction) else type(x)(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_array(self, xs):
        """Horner evaluation over a numpy array, in float/complex."""
        import numpy as np

        acc = np.zeros_like(xs, dtype=complex if xs.dtype.kind == "c" else float)
        for c in reversed(self.coeffs):
            acc = acc * xs + float(c)
        return acc

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @staticmethod
    def from_json(items: Sequence[str]) -> "Poly":
        return Poly([parse_rational(s) for s in items])

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(format_rational(c))
            elif k == 1:
                parts.append(f"{format_rational(c)}*z")
            else:
                parts.append(f"{format_rational(c)}*z^{k}")
        return "Poly(" + " + ".join(parts) + ")"


class TruncatedSeries:
    """Power series known through z^order (inclusive).

    The order of a sum, product or quotient is the minimum of the operand
    orders, so arithmetic never claims more coefficients than it knows.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f"series order must be nonnegative, got {order}")
        if len(cs) < order + 1:
            cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs[: order + 1])
        self.order = order

    @staticmethod
    def from_poly(p: Poly, order: int) -> "TruncatedSeries":
        return TruncatedSeries(p.coeffs, order)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)], n
        )

    def __mul__(self, other: "TruncatedSeries | RationalLike") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
            return TruncatedSeries(out, n)
        c = Fraction(other)
        return TruncatedSeries([a * c for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k; the order grows with the shift."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        return TruncatedSeries((Fraction(0),) * k + self.coeffs, self.order + k)

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"


def series_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Exact series quotient through min(order(num), order(den)).

    Requires den to be a unit (nonzero constant term); then
    num == series multiply(result, den) through the shared order.
    """
    if den.coeffs[0] == 0:
        raise DivisionByZeroConstantTerm("denominator has zero constant term")
    n = min(num.order, den.order)
    d0 = den.coeffs[0]
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        acc = num.coeffs[k]
        for j in range(1, k + 1):
            acc -= den.coeffs[j] * out[k - j]
        out[k] = acc / d0
    return TruncatedSeries(out, n)


def hyp2f1_series(
    a: RationalLike, b: RationalLike, c: RationalLike, order: int
) -> TruncatedSeries:
    """Gauss hypergeometric series: coefficient of z^m is (a)_m (b)_m / ((c)_m m!).

    Raises PoleInBottomParameter when (c)_m vanishes for some m <= order,
    i.e. when c is zero or a negative integer reachable within the
    truncation window.
    """
    if order < 0:
        raise ValueError(f"series order must be nonnegative, got {order}")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for m in range(order):
        if c + m == 0:
            raise PoleInBottomParameter(
                f"bottom parameter {c} hits a pole at term {m + 1}"
            )
        term *= (a + m) * (b + m)
        term /= (c + m) * (m + 1)
        coeffs.append(term)
    return TruncatedSeries(coeffs, order)

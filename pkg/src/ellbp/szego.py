"""The unit-circle side: reflection parameters, Szego recurrence, the map
to symmetric polynomials on [-2, 2], and the explicit weight functions.

The Christoffel transform at mu = 1 of a palindromic family has symmetric
moments, so its polynomials obey the Szego recurrence
P~_{n+1}(z) = z P~_n(z) - a_n z^n P~_n(1/z) with real reflection
parameters a_n = -P~_{n+1}(0) in (-1, 0).  Rewriting the palindromic
family in x = z^{1/2} + z^{-1/2} lands on symmetric orthogonal
polynomials on [-2, 2] whose recurrence coefficients are those of the
associated Legendre family at shift 1/2.  Weights: complex rho(theta) and
positive rho~(theta) on the circle, w(x) on the interval, all explicit
through K.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .elliptic import abs2_K_unit_modulus
from .exactnum import Poly, RationalLike
from .lbp import FamilySpec, G_value, PolySequence, hermite_family, monic_P
from .transforms import christoffel


class NotPalindromic(ValueError):
    """The family does not have d_n = -1, so no palindromic rewrite exists."""


class SingularDenominator(ZeroDivisionError):
    """(n + nu)^2 = 1/4 in the associated Legendre coefficient."""


class DomainError(ValueError):
    """Weight evaluated at or beyond its domain endpoints."""


@dataclass(frozen=True)
class ReflectionSequence:
    """Reflection parameters a_0..a_{N-1} of the shifted family j."""

    j: int
    a: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.a[n]

    def __len__(self) -> int:
        return len(self.a)


def _ratio_U(j: int, n: int) -> Fraction:
    """U_n = P_{n+1}(1)/P_n(1) = (n+j+3/2) G_{n+1}(j) / ((n+j+1) G_n(j))."""
    return (
        Fraction(2 * (n + j) + 3, 2 * (n + j + 1))
        * G_value(n + 1, j)
        / G_value(n, j)
    )


def reflection_closed_form(n: int) -> Fraction:
    """a_n = -1/(2(n+2)) - 1/(2(n+2) G_{n+1}) for the base (j = 0) family."""
    return -Fraction(1, 2 * (n + 2)) * (1 + 1 / G_value(n + 1))


def reflection_params(j: int, N: int) -> ReflectionSequence:
    """a_n = 1 - U_{n+1} for n = 0..N-1; for j = 0 the closed form must agree."""
    if j < 0 or N < 0:
        raise ValueError("j and N must be nonnegative")
    a = []
    for n in range(N):
        value = 1 - _ratio_U(j, n + 1)
        if j == 0:
            closed = reflection_closed_form(n)
            if closed != value:
                raise AssertionError(
                    f"closed form {closed} != ratio form {value} at n = {n}"
                )
        a.append(value)
    return ReflectionSequence(j=j, a=tuple(a))


def szego_polys(N: int, j: int = 0) -> PolySequence:
    """Unit-circle polynomials: Christoffel transform at mu = 1.

    Each P~_n of the base elliptic family (or its shift j) satisfies the
    Szego recurrence with the reflection parameters of
    :func:`reflection_params`; coefficients are real so the conjugate in
    the reversed polynomial drops out.
    """
    from .lbp import associated_family

    family = hermite_family() if j == 0 else associated_family(j)
    _, polys, _ = christoffel(family, 1, N)
    return polys


def szego_recurrence_residual(polys: Sequence[Poly], a: Sequence[Fraction], n: int) -> Poly:
    """P~_{n+1}(z) - z P~_n(z) + a_n z^n P~_n(1/z); zero when the recurrence holds."""
    reversed_n = polys[n].reverse(n)
    return polys[n + 1] - Poly.x() * polys[n] + a[n] * reversed_n


@dataclass(frozen=True)
class SymmetricOPSequence:
    """Monic symmetric polynomials S_n(x) on [-2, 2] and their u_n > 0."""

    S: tuple[Poly, ...]
    u: tuple[Fraction, ...]  # u[n] valid for n >= 1; u[0] unused placeholder

    def __getitem__(self, n: int) -> Poly:
        return self.S[n]

    def __len__(self) -> int:
        return len(self.S)


def _pair_basis(m_max: int) -> list[Poly]:
    """p_m(x) with p_m(z^{1/2}+z^{-1/2}) = z^{m/2} + z^{-m/2}: p_0 = 2, p_1 = x."""
    basis = [Poly([2]), Poly.x()]
    for _ in range(1, m_max):
        basis.append(Poly.x() * basis[-1] - basis[-2])
    return basis[: m_max + 1]


def symmetric_S(family: FamilySpec, N: int) -> SymmetricOPSequence:
    """S_n(x) = z^{-n/2} P_n(z) under x = z^{1/2} + z^{-1/2}, exactly.

    Requires d_n = -1 throughout (the palindromic class); then each P_n
    has a palindromic coefficient list and the half-power rewrite is an
    exact integer combination of the pair polynomials z^{m/2} + z^{-m/2}.
    The recurrence coefficients are u_n = -b_n.
    """
    if not family.has_unit_negative_d(N):
        raise NotPalindromic(f"{family.kind}: some d_n != -1 through N = {N}")
    polys = monic_P(family, N)
    basis = _pair_basis(N)
    out = []
    for n in range(N + 1):
        p = polys[n]
        if any(p[m] != p[n - m] for m in range(n + 1)):
            raise NotPalindromic(f"P_{n} is not palindromic")
        s = Poly.zero()
        for m in range(n // 2 + 1, n + 1):
            s = s + p[m] * basis[2 * m - n]
        if n % 2 == 0:
            s = s + Poly([p[n // 2]])
        out.append(s)
    u = tuple(Fraction(0) if n == 0 else -family.b(n) for n in range(N + 1))
    return SymmetricOPSequence(S=tuple(out), u=u)


def dg_map_u(N: int, j: int = 0) -> dict[int, Fraction]:
    """u_n = (1 + a_{n-1})(1 - a_{n-2}) from reflection parameters, a_{-1} = -1."""
    refl = reflection_params(j, max(N, 1))

    def a(n: int) -> Fraction:
        return Fraction(-1) if n == -1 else refl[n]

    return {n: (1 + a(n - 1)) * (1 - a(n - 2)) for n in range(1, N + 1)}


def associated_legendre_u(nu: RationalLike, n: int) -> Fraction:
    """u_n = (n+nu)^2 / ((n+nu)^2 - 1/4) of the associated Legendre family."""
    nu = Fraction(nu)
    if nu < 0:
        raise ValueError(f"nu must be nonnegative, got {nu}")
    s = (n + nu) ** 2
    if s == Fraction(1, 4):
        raise SingularDenominator(f"(n + nu)^2 = 1/4 at n = {n}, nu = {nu}")
    return s / (s - Fraction(1, 4))


class WeightKind(enum.Enum):
    CIRCLE_RHO = "circle-rho"
    CIRCLE_RHO_TILDE = "circle-rho-tilde"
    INTERVAL_W = "interval-w"
    INTERVAL_LEGENDRE_W = "interval-legendre-w"


def circle_rho(theta: float) -> complex:
    """Complex circle weight rho(theta) = i e^{-i theta/2} / (2 |K(e^{i theta/2})|^2)."""
    if not 0.0 < theta < 2.0 * math.pi:
        raise DomainError(f"theta must lie in (0, 2*pi), got {theta}")
    return 1j * complex(math.cos(theta / 2), -math.sin(theta / 2)) / (
        2.0 * abs2_K_unit_modulus(theta)
    )


def circle_rho_tilde(theta: float) -> float:
    """Positive circle weight rho~(theta) = sin(theta/2) / (2 |K(e^{i theta/2})|^2)."""
    if not 0.0 < theta < 2.0 * math.pi:
        raise DomainError(f"theta must lie in (0, 2*pi), got {theta}")
    return math.sin(theta / 2) / (2.0 * abs2_K_unit_modulus(theta))


def interval_w(x: float) -> float:
    """w(x) = 2 / (K^2(sqrt(1/2 + x/4)) + K^2(sqrt(1/2 - x/4))) on (-2, 2)."""
    if not -2.0 < x < 2.0:
        raise DomainError(f"x must lie in (-2, 2), got {x}")
    from .elliptic import complete_triple

    kp = math.sqrt(0.5 + x / 4.0)
    km = math.sqrt(0.5 - x / 4.0)
    Kp = complete_triple(kp).K
    Km = complete_triple(km).K
    return 2.0 / (Kp * Kp + Km * Km)


def interval_legendre_w(x: float) -> float:
    """The same interval weight reached through the complex-modulus route.

    w(x) = rho~(theta)/sin(theta/2) = 1/(2 |K(e^{i theta/2})|^2) at
    x = 2 cos(theta/2); this exercises the unit-modulus split formula
    instead of the direct real form, so the two interval kinds
    cross-check each other.
    """
    if not -2.0 < x < 2.0:
        raise DomainError(f"x must lie in (-2, 2), got {x}")
    theta = 2.0 * math.acos(x / 2.0)
    return 1.0 / (2.0 * abs2_K_unit_modulus(theta))


_WEIGHT_FUNCS = {
    WeightKind.CIRCLE_RHO: circle_rho,
    WeightKind.CIRCLE_RHO_TILDE: circle_rho_tilde,
    WeightKind.INTERVAL_W: interval_w,
    WeightKind.INTERVAL_LEGENDRE_W: interval_legendre_w,
}


def weight(kind: WeightKind | str, point: float):
    """Evaluate one of the four explicit weights at a point of its domain."""
    if isinstance(kind, str):
        kind = WeightKind(kind)
    return _WEIGHT_FUNCS[kind](point)

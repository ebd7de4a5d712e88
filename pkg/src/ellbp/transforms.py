"""Christoffel and Geronimus spectral transformations of LBP families.

Each transform exists in three guises that must agree: a coefficient map
(b_n, d_n) -> (b~_n, d~_n), an explicit polynomial formula, and a moment
map.  The Christoffel transform divides out a zero inserted at z = mu;
the Geronimus transform is its inverse and adds a concentrated mass to
the measure at z = mu.  All parameters are exact rationals so agreement
checks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .exactnum import Poly, RationalLike, format_rational
from .lbp import (
    DegenerateFamily,
    FamilySpec,
    MomentTable,
    PolySequence,
    associated_P1,
    monic_P,
    recurrence_from_polys,
    same_coefficients,
)


class ZeroAtTransformPoint(ValueError):
    """P_n(mu) = 0, so the Christoffel data U_n does not exist."""


class MomentMapSingular(ValueError):
    """c_1 = mu makes the Christoffel moment map undefined."""


class DegeneratePhiRatio(ValueError):
    """phi_n = 0 or mu = phi_n/phi_{n-1}; the Geronimus data degenerates."""


class ChiEqualsD0(ValueError):
    """chi = d_0 makes nu = mu chi/(d_0 - chi) singular."""


class DegenerateTransformedFamily(DegenerateFamily):
    """chi = 0 forces b~_1 = 0: the transformed family is degenerate."""


@dataclass(frozen=True)
class ChristoffelData:
    """Transform point mu and the ratio sequence U_n = P_{n+1}(mu)/P_n(mu)."""

    mu: Fraction
    U: tuple[Fraction, ...]


@dataclass(frozen=True)
class GeronimusData:
    """All auxiliary Geronimus data; mass = (nu+1)/(2 pi) at z = mu."""

    mu: Fraction
    chi: Fraction
    phi: tuple[Fraction, ...]
    V: tuple[Fraction, ...]
    nu: Fraction

    @property
    def mass_times_2pi(self) -> Fraction:
        """2 pi M = nu + 1 (M itself is irrational through the 1/(2 pi))."""
        return self.nu + 1

    @property
    def mass(self) -> float:
        import math

        return float(self.nu + 1) / (2.0 * math.pi)

    def to_json(self) -> dict:
        return {
            "mu": format_rational(self.mu),
            "chi": format_rational(self.chi),
            "nu": format_rational(self.nu),
            "mass": f"({format_rational(self.nu + 1)})/(2*pi)",
            "table": [
                {"n": n, "phi": format_rational(self.phi[n]), "V": format_rational(self.V[n])}
                for n in range(len(self.V))
            ],
        }


def christoffel_U(family: FamilySpec, mu: RationalLike, N: int) -> ChristoffelData:
    """U_n = P_{n+1}(mu)/P_n(mu) for n = 0..N; errors if some P_n(mu) = 0."""
    mu = Fraction(mu)
    base = monic_P(family, N + 1)
    values = [p(mu) for p in base.polys]
    for n in range(1, N + 2):
        if values[n] == 0:
            raise ZeroAtTransformPoint(f"P_{n}({mu}) = 0")
    return ChristoffelData(mu=mu, U=tuple(values[n + 1] / values[n] for n in range(N + 1)))


def christoffel(
    family: FamilySpec, mu: RationalLike, N: int
) -> tuple[FamilySpec, PolySequence, Callable[[MomentTable], MomentTable]]:
    """Christoffel transform at mu: coefficient family, polynomials, moment map.

    The polynomials come from the exact division
    P~_n = (P_{n+1} - U_n P_n)/(z - mu); the coefficient family from
    b~_n = b_n (b_{n+1} + U_n)/(b_n + U_{n-1}),
    d~_n = d_n (d_{n+1} + U_{n+1})/(d_n + U_n); the two must agree (the
    test suite checks they do).  The moment map sends
    c_n -> (c_{n+1} - mu c_n)/(c_1 - mu), defined when c_1 != mu.
    """
    mu = Fraction(mu)
    data = christoffel_U(family, mu, N + 1)
    base = monic_P(family, N + 2)

    polys = []
    for n in range(N + 1):
        num = base[n + 1] - data.U[n] * base[n]
        polys.append(num.divexact_linear(mu))

    U = data.U

    def b_fn(n: int) -> Fraction:
        return family.b(n) * (family.b(n + 1) + U[n]) / (family.b(n) + U[n - 1])

    def d_fn(n: int) -> Fraction:
        return family.d(n) * (family.d(n + 1) + U[n + 1]) / (family.d(n) + U[n])

    transformed = FamilySpec(
        f"christoffel({family.kind}, mu={mu})", b_fn, d_fn, params={"mu": mu}
    )

    def moment_map(table: MomentTable) -> MomentTable:
        if table[1] == mu:
            raise MomentMapSingular(f"c_1 = mu = {mu}")
        den = table[1] - mu
        out = {
            s: (table[s + 1] - mu * table[s]) / den
            for s in range(table.min_index, table.max_index)
        }
        return MomentTable(out)

    return transformed, PolySequence(transformed, tuple(polys)), moment_map


def christoffel_zero(family: FamilySpec, N: int) -> FamilySpec:
    """Christoffel transform at mu = 0 (coefficient level).

    b~_n = b_n (b_{n+1} - d_n)/(b_n - d_{n-1});
    d~_0 = d_0 - b_1, d~_n = d_{n-1} (b_{n+1} - d_n)/(b_n - d_{n-1}).
    The n = 0 entry is genuinely irregular because b_0 does not exist.
    """
    if family.d(0) == 0:
        raise DegenerateFamily(f"{family.kind}: d_0 = 0")

    def ratio(n: int) -> Fraction:
        num = family.b(n + 1) - family.d(n)
        den = family.b(n) - family.d(n - 1) if n >= 2 else family.b(1) - family.d(0)
        if den == 0:
            raise DegenerateFamily(f"b_{n} - d_{n-1} = 0 at n = {n}")
        return num / den

    def b_fn(n: int) -> Fraction:
        return family.b(n) * ratio(n)

    def d_fn(n: int) -> Fraction:
        if n == 0:
            return family.d(0) - family.b(1)
        return family.d(n - 1) * ratio(n)

    return FamilySpec(f"christoffel0({family.kind})", b_fn, d_fn)


def christoffel_zero_polys(family: FamilySpec, N: int) -> PolySequence:
    """mu = 0 transform at the polynomial level: (P_{n+1} + d_n P_n)/z."""
    base = monic_P(family, N + 1)
    polys = tuple(
        (base[n + 1] + family.d(n) * base[n]).divide_by_x() for n in range(N + 1)
    )
    return PolySequence(None, polys)


def christoffel_zero_moments(table: MomentTable) -> MomentTable:
    """mu = 0 moment shift c~_n = c_{n+1}/c_1."""
    if table[1] == 0:
        raise MomentMapSingular("c_1 = 0")
    return MomentTable(
        {s: table[s + 1] / table[1] for s in range(table.min_index, table.max_index)}
    )


def geronimus(
    family: FamilySpec, mu: RationalLike, chi: RationalLike, N: int
) -> tuple[FamilySpec, PolySequence, GeronimusData]:
    """Geronimus transform: P~_n = V_n P_n + z (1 - V_n) P_{n-1}.

    phi_n = P_n(mu) + chi P^(1)_{n-1}(mu) solves the recurrence at z = mu;
    V_0 = 1, V_n = mu/(mu - phi_n/phi_{n-1}).  Coefficient level:
    b~_1 = chi (V_1 - 1), b~_n = b_{n-1} (1 - V_n)/(1 - V_{n-1}),
    d~_n = d_n V_{n+1}/V_n.  The measure acquires mass
    M = (nu + 1)/(2 pi) at z = mu, nu = mu chi/(d_0 - chi).
    """
    mu, chi = Fraction(mu), Fraction(chi)
    if chi == family.d(0):
        raise ChiEqualsD0(f"chi = d_0 = {chi}")
    if chi == 0:
        raise DegenerateTransformedFamily("chi = 0 forces b~_1 = 0")

    base = monic_P(family, N + 2)
    assoc = associated_P1(family, N + 1)
    phi: list[Fraction] = [Fraction(1)]
    for n in range(1, N + 2):
        phi.append(base[n](mu) + chi * assoc[n - 1](mu))

    V: list[Fraction] = [Fraction(1)]
    for n in range(1, N + 2):
        if phi[n - 1] == 0:
            raise DegeneratePhiRatio(f"phi_{n - 1} = 0")
        r = phi[n] / phi[n - 1]
        if r == mu:
            raise DegeneratePhiRatio(f"mu = phi_{n}/phi_{n - 1}")
        V.append(mu / (mu - r))
        if V[n] == 1:
            # happens iff phi_n = 0; the b~ ratio below would divide by zero
            raise DegeneratePhiRatio(f"V_{n} = 1 (phi_{n} = 0)")

    z = Poly.x()
    polys = [Poly.one()]
    for n in range(1, N + 1):
        polys.append(V[n] * base[n] + z * ((1 - V[n]) * base[n - 1]))

    def b_fn(n: int) -> Fraction:
        if n == 1:
            return chi * (V[1] - 1)
        return family.b(n - 1) * (1 - V[n]) / (1 - V[n - 1])

    def d_fn(n: int) -> Fraction:
        return family.d(n) * V[n + 1] / V[n]

    transformed = FamilySpec(
        f"geronimus({family.kind}, mu={mu}, chi={chi})",
        b_fn,
        d_fn,
        params={"mu": mu, "chi": chi},
    )
    nu = mu * chi / (family.d(0) - chi)
    data = GeronimusData(mu=mu, chi=chi, phi=tuple(phi), V=tuple(V), nu=nu)
    return transformed, PolySequence(transformed, tuple(polys)), data


def ct_gt_roundtrip(
    family: FamilySpec, mu: RationalLike, chi: RationalLike, N: int
) -> bool:
    """Geronimus then Christoffel at the same mu recovers (b_n, d_n) exactly.

    The Christoffel ratios are the ones induced by the transformed
    polynomials, U~_n = P~_{n+1}(mu)/P~_n(mu).
    """
    mu = Fraction(mu)
    gt_family, gt_polys, _ = geronimus(family, mu, chi, N + 2)
    values = [p(mu) for p in gt_polys.polys]
    recovered = []
    for n in range(N + 1):
        if values[n] == 0:
            raise ZeroAtTransformPoint(f"GT polynomial vanishes at mu, n = {n}")
        U_n = values[n + 1] / values[n]
        num = gt_polys[n + 1] - U_n * gt_polys[n]
        recovered.append(num.divexact_linear(mu))
    b, d = recurrence_from_polys(recovered)
    ok_d = all(d[n] == family.d(n) for n in range(N))
    ok_b = all(b[n] == family.b(n) for n in range(1, N))
    ok_poly = all(recovered[n] == monic_P(family, N)[n] for n in range(N + 1))
    return ok_d and ok_b and ok_poly


def transform_report_json(
    family: FamilySpec,
    mu: RationalLike,
    chi: Optional[RationalLike],
    N: int,
) -> dict:
    """JSON report for a CT (chi None) or GT (chi given) of a family."""
    mu = Fraction(mu)
    if chi is None:
        data = christoffel_U(family, mu, N)
        transformed, _, _ = christoffel(family, mu, N)
        table = [
            {
                "n": n,
                "b": format_rational(transformed.b(n)) if n >= 1 else None,
                "d": format_rational(transformed.d(n)),
                "U": format_rational(data.U[n]),
            }
            for n in range(N + 1)
        ]
        return {"transform": "christoffel", "mu": format_rational(mu), "table": table}
    transformed, _, gdata = geronimus(family, mu, chi, N + 1)
    table = [
        {
            "n": n,
            "b": format_rational(transformed.b(n)) if n >= 1 else None,
            "d": format_rational(transformed.d(n)),
            "V": format_rational(gdata.V[n]),
            "phi": format_rational(gdata.phi[n]),
        }
        for n in range(N + 1)
    ]
    out = gdata.to_json()
    out.update({"transform": "geronimus", "table": table})
    return out

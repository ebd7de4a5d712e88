import math
from fractions import Fraction as F

import pytest

from ellbp.exactnum import Poly
from ellbp.lbp import associated_family, custom_family, hermite_family
from ellbp.szego import (
    DomainError,
    NotPalindromic,
    SingularDenominator,
    WeightKind,
    associated_legendre_u,
    circle_rho,
    circle_rho_tilde,
    dg_map_u,
    interval_legendre_w,
    interval_w,
    reflection_closed_form,
    reflection_params,
    symmetric_S,
    szego_polys,
    szego_recurrence_residual,
    weight,
)
from ellbp.elliptic import complete_triple


def test_reflection_values():
    refl = reflection_params(0, 10)
    assert refl[0] == F(-7, 16)
    assert refl[1] == F(-19, 69)
    assert reflection_closed_form(0) == F(-7, 16)
    assert reflection_closed_form(1) == F(-19, 69)


def test_reflection_range_closed_vs_ratio():
    refl = reflection_params(0, 200)
    assert all(F(-1) < a < 0 for a in refl.a)
    # reflection_params already asserts closed == ratio internally


def test_reflection_shifted_family():
    refl = reflection_params(2, 50)
    assert all(F(-1) < a < 0 for a in refl.a)


def test_szego_polys_and_recurrence():
    pol = szego_polys(15)
    refl = reflection_params(0, 15)
    assert pol[0] == Poly([1])
    assert pol[1] == Poly([F(7, 16), 1])
    for n in range(15):
        assert szego_recurrence_residual(pol.polys, refl.a, n).is_zero()
        assert refl[n] == -pol[n + 1](F(0))


def test_symmetric_S_values():
    sym = symmetric_S(hermite_family(), 12)
    assert sym[1] == Poly([0, 1])
    assert sym[2] == Poly([F(-9, 8), 0, 1])
    assert sym.u[1] == F(9, 8)
    assert sym.u[2] == F(25, 24)
    for n in range(1, 12):
        assert sym[n + 1] + sym.u[n] * sym[n - 1] == Poly.x() * sym[n]
        assert sym[n].degree == n
        # symmetric: S_n(-x) = (-1)^n S_n(x), so opposite-parity powers vanish
        assert all(sym[n][m] == 0 for m in range(n + 1) if (n - m) % 2 == 1)


def test_symmetric_S_requires_palindromic():
    sc = custom_family(
        lambda n: F(-(2 * n + 1) ** 2, 4 * n * (n + 1)),
        lambda n: F(-1) if n != 2 else F(-2),
    )
    with pytest.raises(NotPalindromic):
        symmetric_S(sc, 6)
    ok = custom_family(lambda n: F(-1, n + 1), lambda n: F(-1))
    assert symmetric_S(ok, 6)[1] == Poly([0, 1])


def test_dg_map_u():
    du = dg_map_u(50)
    assert du[1] == F(9, 8)
    assert du[2] == F(25, 24)
    sym = symmetric_S(hermite_family(), 50)
    for n in range(1, 51):
        assert du[n] == sym.u[n] == F((2 * n + 1) ** 2, 4 * n * (n + 1))


def test_associated_legendre_u():
    assert associated_legendre_u(0, 1) == F(4, 3)
    for n in range(1, 30):
        assert associated_legendre_u(F(1, 2), n) == F((2 * n + 1) ** 2, 4 * n * (n + 1))
    fam = associated_family(2)
    for n in range(1, 11):
        assert associated_legendre_u(F(5, 2), n) == -fam.b(n)
    with pytest.raises(SingularDenominator):
        associated_legendre_u(F(1, 2), 0)


def test_interval_w_checkpoints():
    w0 = interval_w(0.0)
    assert abs(w0 - 1.0 / complete_triple(2 ** -0.5).K ** 2) < 1e-12
    assert abs(w0 - 16.0 * math.pi / math.gamma(0.25) ** 4) < 1e-12
    for x in (0.5, 1.0, 1.7):
        assert abs(interval_w(x) - interval_w(-x)) < 1e-13


def test_weight_consistency_relations():
    theta = math.pi / 2
    lhs = circle_rho_tilde(theta) * 2.0 * (
        (complete_triple(math.cos(theta / 4)).K ** 2 + complete_triple(math.sin(theta / 4)).K ** 2) / 4.0
    )
    assert abs(lhs - math.sin(theta / 2)) < 1e-13
    for theta in (0.3 + 0.12 * i for i in range(50)):
        x = 2.0 * math.cos(theta / 2)
        assert abs(interval_w(x) * math.sin(theta / 2) - circle_rho_tilde(theta)) < 1e-12


def test_two_interval_routes_agree():
    for x in (-1.9, -1.0, -0.2, 0.0, 0.7, 1.5, 1.95):
        assert abs(interval_legendre_w(x) - interval_w(x)) < 1e-12


def test_circle_rho_structure():
    # rho = (sin(theta/2) + i cos(theta/2)) / (2|K|^2): real part is rho~
    theta = 1.1
    v = circle_rho(theta)
    assert abs(v.real - circle_rho_tilde(theta)) < 1e-15
    assert abs(v.imag - circle_rho_tilde(theta) / math.tan(theta / 2)) < 1e-15


def test_weight_dispatch_and_domain():
    assert weight("interval-w", 0.5) == interval_w(0.5)
    assert weight(WeightKind.CIRCLE_RHO_TILDE, 1.0) == circle_rho_tilde(1.0)
    for kind, bad in (
        ("circle-rho", 0.0),
        ("circle-rho-tilde", 2 * math.pi),
        ("interval-w", 2.0),
        ("interval-legendre-w", -2.0),
    ):
        with pytest.raises(DomainError):
            weight(kind, bad)

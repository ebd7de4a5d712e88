"""Acceptance suite: one test per criterion, each printing a status line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines.  Every tolerance is the one stated in the criterion; nothing is
calibrated after the fact.  Criterion 4's n = 30 float tolerance is
strictly tighter than the true contact error of the 30th convergent
(2.0767e-10, an exact consequence of the remainder J_31/(K A_30)); that
single sub-check is a documented expected failure, asserted as stated.
"""

import math
from fractions import Fraction as F

import pytest

from ellbp.elliptic import complete_triple, legendre_relation_residual
from ellbp.exactnum import Poly, pochhammer
from ellbp.lbp import (
    G_value,
    assoc_AB,
    associated_family,
    exact_moments,
    hermite_family,
    monic_P,
    partner_polys,
    recurrence_from_polys,
    sc_coefficient_tables,
    wronskian_residual,
    explicit_A_series,
    explicit_A_legendre,
)
from ellbp.szego import reflection_params, symmetric_S, dg_map_u, interval_w
from ellbp.transforms import christoffel_zero, ct_gt_roundtrip, geronimus
from ellbp.verify import (
    geronimus_gram,
    hermite_biorthogonality_gram,
    interval_gram,
    moment_weight_check,
    pade_order_check,
    szego_gram,
    tfraction_convergent,
)


def report(num: int, label: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    suffix = f"  [{detail}]" if detail else ""
    print(f"criterion {num:2d} {status}: {label}{suffix}")
    assert passed, f"criterion {num}: {label} {detail}"


def test_criterion_01_wronskian():
    ok = all(wronskian_residual(n).is_zero() for n in range(1, 51))
    report(1, "Wronskian residual zero for n <= 50, exact", ok)


def test_criterion_02_triple_construction():
    seq = assoc_AB(0, 25)
    ok = all(
        seq[n][0] == explicit_A_series(n) == explicit_A_legendre(n) for n in range(26)
    )
    report(2, "A_n from recurrence = series convolution = Legendre sum, n <= 25", ok)


def test_criterion_03_moment_orthogonality():
    ok = True
    for fam in (hermite_family(), associated_family(1), associated_family(2)):
        mom = exact_moments(fam, 12)
        polys = monic_P(fam, 12)
        ok = ok and all(
            mom.pair(polys[n], -j) == 0 for n in range(1, 13) for j in range(n)
        )
    mom = exact_moments(hermite_family(), 12)
    ok = ok and [mom[i] for i in range(4)] == [1, -1, F(-1, 8), F(-1, 16)]
    ok = ok and all(mom[-n] == -mom[n + 1] for n in range(1, 12))
    report(3, "exact moment-level biorthogonality, three families, n <= 12", ok)


def test_criterion_04_tfraction_exact():
    ok = True
    for z in (F(1, 2), F(2, 5)):
        for n in range(1, 26):
            A, B = assoc_AB(0, n)[n]
            ok = ok and tfraction_convergent(n, z) == B(z) / A(z)
    report(4, "T-fraction convergents equal B_n/A_n exactly, n <= 25", ok)


@pytest.mark.xfail(
    strict=True,
    reason="spec defect: the true contact error of the 30th convergent at "
    "z = 1/2 is |J_31/(K A_30)| = 2.0767e-10 > 1e-10 (verified in 60-digit "
    "arithmetic); see the decisions ledger",
)
def test_criterion_04_tfraction_float_tolerance():
    t = complete_triple(math.sqrt(0.5))
    err = abs(tfraction_convergent(30, 0.5) - t.J / t.K)
    report(4, "T-fraction n = 30 at z = 0.5 within 1e-10 of J/K", err < 1e-10, f"err {err:.4e}")


def test_criterion_04_tfraction_float_true_error():
    # regression pin for the measured truth behind the xfail above
    t = complete_triple(math.sqrt(0.5))
    err = abs(tfraction_convergent(30, 0.5) - t.J / t.K)
    report(4, "T-fraction n = 30 at z = 0.5, true error 2.077e-10", 2.0e-10 < err < 2.2e-10, f"err {err:.4e}")


def test_criterion_05_pade_order():
    ok = all(pade_order_check(j, n) for j in (0, 1, 2) for n in range(11))
    report(5, "two-point contact order exact for j in {0,1,2}, n <= 10", ok)


def test_criterion_06_mu_zero_closed_forms():
    fam = hermite_family()
    c0 = christoffel_zero(fam, 30)
    ok = c0.d(0) == F(1, 8)
    ok = ok and all(c0.d(n) == F(-n, n + 2) for n in range(1, 31))
    ok = ok and all(
        c0.b(n) == -F((2 * n + 1) ** 2, 4 * (n + 1) * (n + 2)) for n in range(1, 31)
    )
    b_hat, d_hat = recurrence_from_polys(list(partner_polys(fam, 32).polys))
    ok = ok and all(d_hat[n] == c0.d(n) for n in range(31))
    ok = ok and all(b_hat[n] == c0.b(n) for n in range(1, 31))
    report(6, "mu = 0 transform closed forms and partner family, n <= 30", ok)


def test_criterion_07_reflection_parameters():
    refl = reflection_params(0, 200)  # ratio form; closed form asserted inside
    ok = all(F(-1) < a < 0 for a in refl.a)
    ok = ok and refl[0] == F(-7, 16) and refl[1] == F(-19, 69)
    report(7, "reflection parameters: closed = ratio, -1 < a_n < 0, n <= 200", ok)


def test_criterion_08_dg_legendre_chain():
    sym = symmetric_S(hermite_family(), 50)
    du = dg_map_u(50)
    ok = all(
        du[n] == sym.u[n] == F((2 * n + 1) ** 2, 4 * n * (n + 1)) for n in range(1, 51)
    )
    ok = ok and sym[1] == Poly([0, 1]) and sym[2] == Poly([F(-9, 8), 0, 1])
    report(8, "u_n chain: reflection map = palindromic rewrite = closed form, n <= 50", ok)


def test_criterion_09_geronimus():
    fam = hermite_family()
    _, _, gdata = geronimus(fam, 1, 1, 20)
    ok = all(
        gdata.phi[n] == pochhammer(F(3, 2), n) / pochhammer(1, n) * (3 * G_value(n) - 2)
        for n in range(21)
    )
    ok = ok and ct_gt_roundtrip(fam, 1, 1, 10)
    ok = ok and gdata.mass_times_2pi == F(1, 2)
    ok = ok and abs(gdata.mass - 1.0 / (2.0 * math.pi * (1.0 + 1.0))) < 1e-16
    report(9, "Geronimus phi closed form, roundtrip, M = 1/(2 pi (1+chi))", ok)


def test_criterion_10_quadrature_orthogonality():
    r1 = szego_gram(2048, 6, tol=1e-8)
    ok = r1.max_offdiag_rel < 1e-8 and max(r1.diag_ratio_errors) < 1e-7
    r2 = interval_gram(512, 8, tol=1e-8)
    ok = ok and r2.max_offdiag_rel < 1e-8 and max(r2.diag_ratio_errors) < 1e-7
    r3 = geronimus_gram(1, 2048, 5, tol=1e-6)
    ok = ok and r3.max_offdiag_rel < 1e-6
    detail = (
        f"szego {r1.max_offdiag_rel:.2e} @2048, interval {r2.max_offdiag_rel:.2e} @512, "
        f"mass-point {r3.max_offdiag_rel:.2e}"
    )
    report(10, "quadrature Gram suppression at stated node counts", ok, detail)


def test_criterion_11_weight_checkpoints():
    w0 = interval_w(0.0)
    ok = abs(w0 - 1.0 / complete_triple(2 ** -0.5).K ** 2) < 1e-12
    ok = ok and abs(w0 - 16.0 * math.pi / math.gamma(0.25) ** 4) < 1e-12
    import random

    rng = random.Random(42)
    worst = max(legendre_relation_residual(rng.uniform(0.01, 0.99)) for _ in range(100))
    ok = ok and worst < 1e-11
    mw = moment_weight_check(6, 2048)
    ok = ok and mw["max_abs_err"] < 1e-9
    report(
        11,
        "w(0), Legendre relation, contour moments vs c_n",
        ok,
        f"legendre {worst:.2e}, moments {mw['max_abs_err']:.2e}",
    )


def test_criterion_12_stieltjes_carlitz_tables():
    rep0 = sc_coefficient_tables(0, 30)
    flags0 = set(rep0.flagged)
    # reduces to the criterion-6 values at p^2 = 0
    ok = rep0.rows[0].d_hat == F(1, 8)
    ok = ok and all(
        row.d_hat == F(-row.n, row.n + 2)
        and row.b_hat == -F((2 * row.n + 1) ** 2, 4 * (row.n + 1) * (row.n + 2))
        for row in rep0.rows[1:]
    )
    # the printed reciprocal b* misses the 1/n factor: flagged for n >= 2
    ok = ok and all((n, "b*") in flags0 for n in range(2, 31))
    ok = ok and (1, "b*") not in flags0
    # the printed partner forms agree with the construction for n >= 1
    ok = ok and not any(w in ("b^", "d^") and n >= 1 for n, w in flags0)
    rep4 = sc_coefficient_tables(4, 12)
    agree4 = not any(w in ("b^", "d^") and n >= 1 for n, w in rep4.flagged)
    detail = f"p2=4 partner closed forms agree for n >= 1: {agree4}"
    report(12, "Stieltjes-Carlitz tables: flags and reductions", ok and agree4, detail)

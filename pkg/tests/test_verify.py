import math
from fractions import Fraction as F

import numpy as np
import pytest

from ellbp.elliptic import complete_triple
from ellbp.lbp import assoc_AB, exact_moments, hermite_family
from ellbp.verify import (
    ZeroDenominator,
    circle_grid,
    contact_order,
    geronimus_gram,
    geronimus_mass_precise,
    geronimus_regular_moment,
    hermite_biorthogonality_gram,
    interval_gram,
    interval_grid,
    moment_weight_check,
    pade_order_check,
    pade_reciprocal_check,
    ratio_series,
    szego_gram,
    tfraction_convergent,
)


def test_tfraction_symbolic_first_convergent():
    z = F(1, 2)
    assert tfraction_convergent(1, z) == z / (2 * (1 + z))


def test_tfraction_equals_AB_ratio():
    for z in (F(1, 2), F(1, 3), F(-2, 7)):
        for n in range(1, 26):
            A, B = assoc_AB(0, n)[n]
            assert tfraction_convergent(n, z) == B(z) / A(z)


def test_tfraction_float_convergence():
    t = complete_triple(math.sqrt(0.5))
    err = abs(tfraction_convergent(30, 0.5) - t.J / t.K)
    # the true contact error at n = 30, z = 1/2 is 2.0767e-10 (the
    # remainder J_31/(K A_30)); each further level halves it
    assert 1e-10 < err < 3e-10
    assert abs(tfraction_convergent(40, 0.5) - t.J / t.K) < 3e-13


def test_tfraction_zero_denominator():
    with pytest.raises(ZeroDenominator):
        tfraction_convergent(1, F(-1))


def test_ratio_series_values():
    s = ratio_series(0, 3)
    assert s.coeffs == (0, F(1, 2), F(1, 16), F(1, 32))


def test_contact_orders():
    # F A_1 - B_1 begins at z^2
    assert contact_order(0, 1) == 2
    for n in range(1, 8):
        assert contact_order(0, n) == n + 1


def test_pade_order_check():
    assert pade_order_check(0, 0)
    for j in (0, 1, 2):
        for n in range(11):
            assert pade_order_check(j, n)


def test_pade_reciprocal():
    for n in range(1, 9):
        assert pade_reciprocal_check(n)


def test_circle_grid_properties():
    g = circle_grid(256, graded=False)
    assert g.size == 256
    assert g.nodes[0] > 0  # theta = 0 never sampled
    assert abs(np.sum(g.weights) - 2 * math.pi) < 1e-12
    gg = circle_grid(256, graded=True)
    assert np.all(gg.nodes > 0) and np.all(gg.nodes < math.pi)
    assert abs(np.sum(gg.weights) - 2 * math.pi) < 1e-10
    with pytest.raises(ValueError):
        circle_grid(4)


def test_interval_grid_properties():
    g = interval_grid(128, graded=False)
    assert g.size == 128
    assert abs(np.sum(g.weights) - 4.0) < 1e-12
    gg = interval_grid(256, graded=True)
    assert np.allclose(gg.nodes, -gg.nodes[::-1])
    assert abs(np.sum(gg.weights) - 4.0) < 1e-9


def test_szego_gram():
    r = szego_gram(2048, 6)
    assert r.max_offdiag_rel < 1e-8
    assert max(r.diag_ratio_errors) < 1e-7
    assert r.passed
    js = r.to_json()
    assert js["pass"] is True and js["nodes"] == 2048


def test_hermite_biorthogonality_gram():
    r = hermite_biorthogonality_gram(2048, 5)
    assert r.max_offdiag_rel < 1e-7
    assert r.passed


def test_geronimus_gram():
    r = geronimus_gram(1, 2048, 5)
    assert r.max_offdiag_rel < 1e-6
    assert abs(r.extra["mass_grid_consistent"] - r.extra["mass_closed_form_working"]) < 0.01
    assert r.extra["mass_closed_form_working"] == -3.0
    r2 = geronimus_gram(2, 1024, 4)
    assert r2.max_offdiag_rel < 1e-6
    assert r2.extra["mass_closed_form_working"] == -2.5


def test_interval_gram():
    r = interval_gram(512, 8)
    assert r.max_offdiag_rel < 1e-8
    assert max(r.diag_ratio_errors) < 1e-7
    assert r.extra["max_opposite_parity"] < 1e-14


def test_plain_grids_converge_slowly_but_sanely():
    # the plain midpoint rule is kept for diagnostics: it converges, just
    # not to the tolerances the graded rule reaches
    from ellbp.szego import szego_polys
    from ellbp.verify import WeightKind, circle_gram

    pol = szego_polys(4).polys
    coarse = circle_gram(WeightKind.CIRCLE_RHO_TILDE, pol, pol, 512, 3, graded=False)
    fine = circle_gram(WeightKind.CIRCLE_RHO_TILDE, pol, pol, 2048, 3, graded=False)
    assert fine.max_offdiag_rel < coarse.max_offdiag_rel
    assert fine.max_offdiag_rel < 1e-6


def test_moment_weight_check():
    rep = moment_weight_check(6, 1024)
    assert rep["max_abs_err"] < 1e-9
    assert abs(rep["moments"][0]["numeric"] - 1.0) < 1e-9
    assert abs(rep["moments"][2]["numeric"] + 0.125) < 1e-9
    assert abs(rep["moments"][-1]["numeric"] - 0.125) < 1e-9


def test_geronimus_regular_moments_recurrence():
    mom = exact_moments(hermite_family(), 6)
    I = {s: geronimus_regular_moment(s, 2048) for s in range(-3, 5)}
    for s in range(-3, 4):
        assert abs(I[s + 1] - I[s] - float(mom[s])) < 1e-12


def test_geronimus_mass_precise():
    assert abs(geronimus_mass_precise(400) - 1.0) < 1e-12

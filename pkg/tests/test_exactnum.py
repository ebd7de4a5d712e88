import random
from fractions import Fraction as F

import pytest

from ellbp.exactnum import (
    DivisionByZeroConstantTerm,
    PoleInBottomParameter,
    Poly,
    TruncatedSeries,
    format_rational,
    harmonic_number,
    hyp2f1_series,
    parse_rational,
    pochhammer,
    series_divide,
)


def test_pochhammer_values():
    assert pochhammer(F(3, 2), 0) == 1
    assert pochhammer(F(3, 2), 2) == F(15, 4)
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert pochhammer(1, 5) == 120


def test_pochhammer_rejects_negative_n():
    with pytest.raises(ValueError):
        pochhammer(F(1, 2), -1)


def test_hyp2f1_series_values():
    s = hyp2f1_series(F(1, 2), F(1, 2), 1, 2)
    assert s.coeffs == (1, F(1, 4), F(9, 64))
    s = hyp2f1_series(F(3, 2), F(1, 2), 2, 2)
    assert s.coeffs == (1, F(3, 8), F(15, 64))
    assert hyp2f1_series(F(7, 3), F(-1, 5), F(9, 2), 0).coeffs == (1,)


def test_hyp2f1_coefficient_ratio_property():
    rng = random.Random(1)
    for _ in range(20):
        a = F(rng.randint(-8, 8), rng.randint(1, 8))
        b = F(rng.randint(-8, 8), rng.randint(1, 8))
        c = F(rng.randint(1, 8), rng.randint(1, 8))
        s = hyp2f1_series(a, b, c, 10)
        for m in range(10):
            assert s.coeffs[m + 1] * (c + m) * (m + 1) == s.coeffs[m] * (a + m) * (b + m)


def test_hyp2f1_bottom_pole():
    with pytest.raises(PoleInBottomParameter):
        hyp2f1_series(F(1, 2), F(1, 2), -2, 5)
    # pole beyond the truncation window is fine
    assert hyp2f1_series(F(1, 2), F(1, 2), -7, 5).coeffs[0] == 1


def test_series_rejects_negative_order():
    with pytest.raises(ValueError):
        TruncatedSeries([1], order=-1)
    with pytest.raises(ValueError):
        hyp2f1_series(1, 1, 1, -2)


def test_series_divide_geometric():
    one = TruncatedSeries([1, 0, 0, 0])
    den = TruncatedSeries([1, -1, 0, 0])
    assert series_divide(one, den).coeffs == (1, 1, 1, 1)


def test_series_divide_hypergeometric_ratio():
    num = hyp2f1_series(F(3, 2), F(1, 2), 2, 2)
    den = hyp2f1_series(F(1, 2), F(1, 2), 1, 2)
    assert series_divide(num, den).coeffs == (1, F(1, 8), F(1, 16))


def test_series_self_quotient():
    s = TruncatedSeries([F(2), F(-1, 3), F(7, 5), F(1, 9)])
    assert series_divide(s, s).coeffs == (1, 0, 0, 0)


def test_series_divide_zero_constant_term():
    with pytest.raises(DivisionByZeroConstantTerm):
        series_divide(TruncatedSeries([1, 1]), TruncatedSeries([0, 1]))


def test_series_divide_multiply_roundtrip():
    rng = random.Random(7)
    for _ in range(20):
        num = TruncatedSeries([F(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(8)])
        den = TruncatedSeries([F(1)] + [F(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(7)])
        assert (series_divide(num, den) * den).coeffs == num.coeffs


def test_series_order_propagation():
    a = TruncatedSeries([1, 2, 3], order=2)
    b = TruncatedSeries([1, 1, 1, 1, 1], order=4)
    assert (a * b).order == 2
    assert (a + b).order == 2
    assert series_divide(b, a).order == 2
    assert a.shift(2).order == 4


def test_poly_eval_and_arith():
    p = Poly([1, F(7, 8), 1])  # z^2 + 7z/8 + 1
    assert p(F(1)) == F(23, 8)
    assert p(F(0)) == 1
    assert Poly([1, 1]) * Poly([-1, 1]) == Poly([-1, 0, 1])
    assert (Poly([1, 2]) + Poly([0, -2])).coeffs == (1,)
    assert (Poly([1]) - Poly([1])).is_zero()
    assert Poly([0, 0, 3]).degree == 2
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)


def test_poly_shift_reverse_divide():
    p = Poly([2, 3])
    assert p.shift(2).coeffs == (0, 0, 2, 3)
    assert p.reverse().coeffs == (3, 2)
    assert Poly([1, 2, 1]).reverse(3).coeffs == (0, 1, 2, 1)
    assert Poly([0, 5, 1]).divide_by_x().coeffs == (5, 1)
    with pytest.raises(ValueError):
        Poly([1, 1]).divide_by_x()


def test_poly_linear_division():
    p = Poly([F(-7, 16), F(-9, 16), 1])
    q = p.divexact_linear(1)
    assert q == Poly([F(7, 16), 1])
    assert q * Poly([-1, 1]) == p
    with pytest.raises(ValueError):
        Poly([1, 1]).divexact_linear(1)


def test_rational_serialization():
    assert format_rational(F(-9, 8)) == "-9/8"
    assert format_rational(F(4, 2)) == "2"
    assert parse_rational("-9/8") == F(-9, 8)
    assert parse_rational("3") == 3
    p = Poly([F(1), F(-1, 3)])
    assert Poly.from_json(p.to_json()) == p


def test_harmonic_number():
    assert harmonic_number(0) == 0
    assert harmonic_number(3) == F(11, 6)

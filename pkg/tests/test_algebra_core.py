"""Exact scalars, deformation polynomials, truncated series, ring linalg."""

from fractions import Fraction as F

import pytest

from qtau.algebra_core import (QPoly, TruncatedSeries, det_rational, det_ring,
                               exp_generating, format_rational, h_from_times,
                               mat_mul_ring, parse_rational, power_series_div,
                               qpoly_eval, series_product)
from qtau.miwa import from_points


def test_parse_format_round_trip():
    assert parse_rational("3/7") == F(3, 7)
    assert parse_rational("-2") == F(-2)
    assert format_rational(F(3, 7)) == "3/7"
    assert format_rational(F(4)) == "4"
    assert parse_rational(format_rational(F(-22, 7))) == F(-22, 7)


def test_qpoly_eval_examples():
    one_minus = QPoly([1, -1])          # 1 - Q
    assert qpoly_eval(one_minus, F(0)) == 1
    assert qpoly_eval(QPoly.gen(), F(1, 3)) == F(1, 3)
    p = QPoly([1, -1]) * QPoly([1, 0, -1])   # (1-Q)(1-Q^2)
    assert qpoly_eval(p, F(1, 2)) == F(3, 8)
    assert p(F(1, 2)) == F(3, 8)


def test_qpoly_arithmetic():
    q = QPoly.gen()
    assert (1 - q) * (1 + q) == 1 - q ** 2
    assert (q ** 3).degree == 3
    assert (q - q).is_zero()
    assert QPoly([0, 1, 2]).coefficient(2) == 2
    assert QPoly([0, 1, 2]).coefficient(9) == 0
    assert hash(QPoly([1])) == hash(QPoly.one())
    assert QPoly([5]) == 5


def test_series_product_examples():
    names = ("x",)
    one = TruncatedSeries.one(names, 2)
    x = TruncatedSeries.variable(names, 2, "x")
    assert series_product(one + x, one - x) == one - x * x
    # cutoff 1 drops the quadratic term
    one1 = TruncatedSeries.one(names, 1)
    x1 = TruncatedSeries.variable(names, 1, "x")
    sq = series_product(one1 + x1, one1 + x1)
    assert sq == one1 + x1 + x1

    # geometric series 1/(1 - z/2): multiplying back gives 1
    z = TruncatedSeries.variable(("z",), 3, "z")
    geo = TruncatedSeries.one(("z",), 3)
    zpow = TruncatedSeries.one(("z",), 3)
    for k in range(1, 4):
        zpow = zpow * z
        geo = geo + zpow.scale(F(1, 2) ** k)
    assert geo.coefficient((3,)) == F(1, 8)
    assert series_product(TruncatedSeries.one(("z",), 3) - z.scale(F(1, 2)),
                          geo) == TruncatedSeries.one(("z",), 3)


def test_series_mismatched_variables():
    a = TruncatedSeries.one(("x",), 2)
    b = TruncatedSeries.one(("y",), 2)
    with pytest.raises(ValueError):
        series_product(a, b)


def test_exp_generating():
    s = exp_generating([F(1), F(0), F(0)], 3)
    assert [s.coefficient((k,)) for k in range(4)] == [1, 1, F(1, 2), F(1, 6)]
    assert exp_generating([], 2) == TruncatedSeries.one(("z",), 2)
    a = F(2, 3)
    s = exp_generating(from_points([a], 2).values, 2)
    assert [s.coefficient((k,)) for k in range(3)] == [1, a, a * a]


def test_h_from_times_matches_points():
    from qtau.symfunc import homogeneous_list
    pts = [F(1, 2), F(1, 3), F(2, 5)]
    times = from_points(pts, 5)
    assert h_from_times(times.values, 5) == homogeneous_list(pts, 5)


def test_det_rational():
    assert det_rational([[F(1), F(2)], [F(3), F(4)]]) == -2
    assert det_rational([[F(5)]]) == 5
    assert det_rational([]) == 1


def test_det_ring_matches_rational():
    rows = [[F(1), F(2), F(0)], [F(3), F(4), F(1)], [F(0), F(1), F(2)]]
    assert det_ring(rows, one=F(1)) == det_rational(rows)
    q = QPoly.gen()
    poly_det = det_ring([[1 - q, q], [q, 1 + q]], one=QPoly.one())
    assert poly_det == (1 - q) * (1 + q) - q * q


def test_power_series_div():
    # 1 / (1 - z) = 1 + z + z^2 + ...
    quot = power_series_div([F(1)], [F(1), F(-1)], 4)
    assert quot == [F(1)] * 5
    with pytest.raises(ZeroDivisionError):
        power_series_div([F(1)], [F(0), F(1)], 2)


def test_mat_mul_ring():
    a = [[QPoly.one(), QPoly.gen()], [QPoly.zero(), QPoly.one()]]
    b = [[QPoly.one(), -QPoly.gen()], [QPoly.zero(), QPoly.one()]]
    prod = mat_mul_ring(a, b)
    assert prod[0][0] == 1 and prod[0][1].is_zero()
    assert prod[1][0].is_zero() and prod[1][1] == 1

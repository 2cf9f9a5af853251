"""Deformed scalar products: four computation modes and their agreements."""

from fractions import Fraction as F

import pytest

from qtau.partitions import b_lambda, qfactorial
from qtau.phase_model import BoxSpec, scalar_product
from qtau.qboson_model import (MODES, QBosonSpec, big_schur_coeff_check,
                               c_tilde_matrix, graded_components,
                               mode_agreement_report, scalar_product_q)
from qtau.symfunc import hall_littlewood_eval
from qtau.algebra_core import QPoly


def test_hl_sum_single_variable():
    # N=1, M=2: 1 + (1-Q)xy + (1-Q)x^2 y^2
    x, y, q = F(1, 2), F(1, 5), F(1, 3)
    spec = QBosonSpec(BoxSpec(1, 2), q)
    expect = 1 + (1 - q) * x * y + (1 - q) * x ** 2 * y ** 2
    assert scalar_product_q([x], [y], spec, mode="hl_sum") == expect
    # the two all-partition sums coincide with the box sum at N=1
    assert scalar_product_q([x], [y], spec, mode="big_schur") == expect
    assert scalar_product_q([x], [y], spec, mode="twisted_schur") == expect
    # the quotient route sums past the box; it agrees only gradedly
    quot = scalar_product_q([x], [y], spec, mode="det_quotient")
    assert quot != expect
    assert (graded_components([x], [y], spec, "det_quotient", 2)
            == graded_components([x], [y], spec, "hl_sum", 2))


def test_q_zero_reduction():
    xs, ys = [F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]
    spec = QBosonSpec(BoxSpec(2, 3), F(0))
    base = scalar_product(xs, ys, BoxSpec(2, 3), mode="det")
    for mode in MODES:
        assert scalar_product_q(xs, ys, spec, mode) == base


def test_q_one_collapse():
    xs, ys = [F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]
    spec = QBosonSpec(BoxSpec(2, 3), F(1))
    assert scalar_product_q(xs, ys, spec, mode="hl_sum") == 1


def test_hl_sum_matches_definition():
    xs, ys = [F(1, 2), F(2, 5)], [F(1, 3), F(1, 7)]
    q = F(1, 4)
    spec = QBosonSpec(BoxSpec(2, 2), q)
    manual = sum(
        b_lambda(lam)(q)
        * hall_littlewood_eval(lam, xs, q)
        * hall_littlewood_eval(lam, ys, q)
        for lam in spec.box.partitions())
    assert scalar_product_q(xs, ys, spec, mode="hl_sum") == manual


def test_det_quotient_needs_distinct_points():
    spec = QBosonSpec(BoxSpec(2, 2), F(1, 3))
    with pytest.raises(ValueError):
        scalar_product_q([F(1, 2), F(1, 2)], [F(1, 5), F(1, 7)], spec,
                         mode="det_quotient")


def test_unknown_mode():
    spec = QBosonSpec(BoxSpec(1, 1), F(1, 3))
    with pytest.raises(ValueError):
        scalar_product_q([F(1, 2)], [F(1, 5)], spec, mode="bogus")


def test_graded_agreement():
    xs, ys = [F(1, 2), F(1, 3)], [F(1, 5), F(2, 7)]
    spec = QBosonSpec(BoxSpec(2, 2), F(1, 3))
    rep = mode_agreement_report(xs, ys, spec)
    assert rep["graded_window"] == 2
    assert all(rep["graded_equal_hl"].values())
    # full-sum observations: the two all-partition sums agree with each
    # other; finite-box effects keep det_quotient off the box sum
    assert rep["values"]["big_schur"] == rep["values"]["twisted_schur"]
    base = graded_components(xs, ys, spec, "hl_sum", 2)
    for mode in MODES:
        assert graded_components(xs, ys, spec, mode, 2) == base


def test_c_tilde_small():
    q = QPoly.gen()
    assert c_tilde_matrix(0) == ((QPoly.one(),),)
    assert c_tilde_matrix(1) == ((QPoly.one() - q,),)
    # the d=2 matrix is symmetric and passes its internal identities
    ct = c_tilde_matrix(2)
    assert ct[0][1] == ct[1][0]


def test_big_schur_coefficient_expansion():
    ys = [F(1, 2), F(1, 3), F(2, 5)]
    for q in (F(1, 4), F(1, 3)):
        for mu in ((1,), (2,), (1, 1), (2, 1)):
            assert big_schur_coeff_check(mu, ys, q)


def test_spec_validation():
    # the deformation value is coerced to an exact rational
    assert QBosonSpec(BoxSpec(1, 1), "1/3").q == F(1, 3)
    spec = QBosonSpec(BoxSpec(2, 2), F(1, 4))
    with pytest.raises(ValueError):
        scalar_product_q([F(1, 2)], [F(1, 5), F(1, 7)], spec, mode="hl_sum")


def test_normalization_factor_structure():
    # the hl_sum norm at lam with repeated parts carries [mult]! factors
    q = F(1, 3)
    assert b_lambda((2, 2))(q) == qfactorial(2)(q)
    assert b_lambda((2, 1))(q) == qfactorial(1)(q) ** 2

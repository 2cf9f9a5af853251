"""Bethe-equation solvers: closed form, residuals, Newton continuation."""

import cmath
import math

import pytest

from qtau.bethe import (BetheRoots, residual, solve_phase, solve_qboson,
                        solve_qboson_continued)


def test_single_particle_roots_of_unity():
    for m in range(7):
        for k in (0, 1, 2, 5):
            br = solve_phase(1, m, [k])
            expect = cmath.exp(2j * math.pi * k / (m + 1))
            assert abs(br.roots[0] - expect) < 1e-12
            assert br.residual < 1e-12


def test_phase_residuals():
    worst = 0.0
    for n in range(1, 4):
        for m in range(0, 7):
            br = solve_phase(n, m, list(range(n)))
            worst = max(worst, br.residual)
            # the phase-model roots live on the unit circle
            for z in br.roots:
                assert abs(abs(z) - 1) < 1e-12
    assert worst < 1e-10


def test_residual_sensitivity():
    br = solve_phase(2, 2, [0, 1])
    assert residual("phase", 2, 2, 0.0, br.roots) < 1e-12
    bumped = [br.roots[0] + 1e-3, br.roots[1]]
    assert residual("phase", 2, 2, 0.0, bumped) > 1e-4


def test_product_consistency_relation():
    # multiplying all equations: prod y_i^{N+M} = (prod y_i)^{N-1}
    br = solve_phase(3, 4, [0, 1, 2])
    lhs = math.prod(z ** 7 for z in br.roots)
    rhs = math.prod(br.roots) ** 2
    assert abs(lhs - rhs) < 1e-10


def test_quantum_number_validation():
    with pytest.raises(ValueError):
        solve_phase(2, 2, [1, 1])        # repeated quantum numbers
    with pytest.raises(ValueError):
        solve_phase(2, 2, [0])           # wrong count


def test_qboson_zero_deformation_fixed_point():
    ph = solve_phase(2, 3, [0, 1])
    qb = solve_qboson(2, 3, 0.0, ph)
    assert max(abs(a - b) for a, b in zip(ph.roots, qb.roots)) < 1e-12


def test_qboson_continuation():
    for n, m in ((2, 2), (2, 4), (3, 3)):
        br = solve_qboson_continued(n, m, 0.3, list(range(n)))
        assert br.residual < 1e-10
        assert residual("qboson", n, m, 0.3, br.roots) < 1e-10


def test_single_particle_any_deformation():
    # N=1 keeps the same roots of unity for every deformation value
    ph = solve_phase(1, 3, [1])
    qb = solve_qboson_continued(1, 3, 0.4, [1])
    assert abs(ph.roots[0] - qb.roots[0]) < 1e-12


def test_deformation_range():
    ph = solve_phase(2, 2, [0, 1])
    with pytest.raises(ValueError):
        solve_qboson(2, 2, 1.0, ph)
    with pytest.raises(ValueError):
        solve_qboson(2, 2, -0.1, ph)


def test_roots_are_sorted_deterministically():
    a = solve_phase(3, 3, [0, 1, 2])
    b = solve_phase(3, 3, [0, 1, 2])
    assert a == BetheRoots(b.roots, b.residual)

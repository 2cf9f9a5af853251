"""Numerical solution of the on-shell equations for both models.

This is deliberately the only inexact module in the package.  The
phase-model system linearizes exactly in the arguments of unit-modulus
roots, so it is solved in closed form from integer quantum numbers; the
residual of the product-form equations is still computed and reported
rather than assumed.

The deformed equations use the number-of-sites exponent M+1 together
with the two-body scattering ratio,

    y_i^{M+1} = prod_{j != i} (Q y_i - y_j) / (y_i - Q y_j).

At Q = 0 the ratio degenerates to (-y_j)/y_i and the system collapses
to the phase-model form y_i^{N+M} = (-1)^{N-1} prod_{j != i} y_j, which
is why Newton continuation in Q starts from the phase solution.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

MAX_NEWTON_STEPS = 80
TARGET_RESIDUAL = 1e-10


@dataclass(frozen=True)
class BetheRoots:
    """Roots sorted by phase angle, with the reported equation residual."""

    roots: Tuple[complex, ...]
    residual: float


def _sorted_roots(values) -> Tuple[complex, ...]:
    return tuple(sorted((complex(z) for z in values),
                        key=lambda z: (math.atan2(z.imag, z.real), abs(z))))


def residual(model: str, n: int, m: int, q: float,
             roots: Sequence[complex]) -> float:
    """Max over i of |LHS_i - RHS_i| for the stated equation form."""
    ys = [complex(z) for z in roots]
    worst = 0.0
    for i, y in enumerate(ys):
        others = [z for j, z in enumerate(ys) if j != i]
        if model == "phase":
            lhs = y ** (n + m)
            rhs = (-1) ** (n - 1) * math.prod(others) if others else \
                complex((-1) ** (n - 1))
        elif model == "qboson":
            lhs = y ** (m + 1)
            rhs = complex(1.0)
            for z in others:
                rhs *= (q * y - z) / (y - q * z)
        else:
            raise ValueError(f"unknown model {model!r}")
        worst = max(worst, abs(lhs - rhs))
    return worst


def solve_phase(n: int, m: int,
                quantum_numbers: Sequence[int]) -> BetheRoots:
    """Closed-form unit-circle solution from integer quantum numbers.

    Writing y_j = exp(i theta_j), the equations become linear in the
    angles: (N+M+1) theta_i = pi (N-1) + sum(theta) + 2 pi I_i, and
    summing fixes sum(theta) = [N pi (N-1) + 2 pi sum(I)] / (M+1).
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    ks = [int(k) for k in quantum_numbers]
    if len(ks) != n:
        raise ValueError("need exactly n quantum numbers")
    if len(set(ks)) != n:
        raise ValueError("quantum numbers must be pairwise distinct")
    total = (n * math.pi * (n - 1) + 2.0 * math.pi * sum(ks)) / (m + 1)
    thetas = [(math.pi * (n - 1) + total + 2.0 * math.pi * k) / (n + m + 1)
              for k in ks]
    roots = [cmath.exp(1j * t) for t in thetas]
    res = residual("phase", n, m, 0.0, roots)
    if res > TARGET_RESIDUAL:
        raise ArithmeticError(
            f"closed-form phase roots missed the residual target: {res}")
    return BetheRoots(roots=_sorted_roots(roots), residual=res)


def _cleared_system(ys: np.ndarray, m: int, q: float):
    """F and its Jacobian for F_i = y_i^{M+1} P_i - R_i.

    P_i = prod_{j != i} (y_i - Q y_j) and R_i = prod_{j != i}
    (Q y_i - y_j); clearing the denominators keeps Newton steps finite
    when a trial point drifts near a pole of the ratio form.
    """
    n = len(ys)
    F = np.zeros(n, dtype=complex)
    J = np.zeros((n, n), dtype=complex)
    for i in range(n):
        yi = ys[i]
        P = complex(1.0)
        R = complex(1.0)
        for j in range(n):
            if j != i:
                P *= yi - q * ys[j]
                R *= q * yi - ys[j]
        F[i] = yi ** (m + 1) * P - R
        dP = complex(0.0)
        dR = complex(0.0)
        for j in range(n):
            if j != i:
                dP += P / (yi - q * ys[j])
                dR += R * q / (q * yi - ys[j])
        J[i, i] = (m + 1) * yi ** m * P + yi ** (m + 1) * dP - dR
        for k in range(n):
            if k != i:
                J[i, k] = (-(q) * yi ** (m + 1) * P / (yi - q * ys[k])
                           + R / (q * yi - ys[k]))
    return F, J


def solve_qboson(n: int, m: int, q: float, initial: BetheRoots) -> BetheRoots:
    """Newton refinement of the deformed equations from a given start.

    Intended use is continuation: feed the phase-model solution at
    Q = 0, then increase Q in small steps, passing each solution as the
    next start (solve_qboson_continued wraps exactly that loop).
    """
    if not 0.0 <= q < 1.0:
        raise ValueError("Q must lie in [0, 1)")
    ys = np.array([complex(z) for z in initial.roots], dtype=complex)
    if len(ys) != n:
        raise ValueError("initial guess has the wrong number of roots")
    for _ in range(MAX_NEWTON_STEPS):
        try:
            F, J = _cleared_system(ys, m, q)
        except ZeroDivisionError as exc:
            raise ArithmeticError(
                "Jacobian evaluation hit a pole of the scattering ratio"
            ) from exc
        if not np.all(np.isfinite(F)):
            raise ArithmeticError("divergent Newton iterate")
        try:
            delta = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError as exc:
            raise ArithmeticError("singular Jacobian") from exc
        ys = ys + delta
        if float(np.max(np.abs(delta))) < 1e-13:
            break
    res = residual("qboson", n, m, q, ys.tolist())
    if not res < TARGET_RESIDUAL:
        raise ArithmeticError(
            f"Newton iteration did not converge: residual {res}")
    return BetheRoots(roots=_sorted_roots(ys.tolist()), residual=res)


def solve_qboson_continued(n: int, m: int, q: float,
                           quantum_numbers: Sequence[int],
                           step: float = 0.05) -> BetheRoots:
    """Homotopy in Q from the phase solution, in increments of at most step."""
    state = solve_phase(n, m, quantum_numbers)
    if q == 0.0:
        return solve_qboson(n, m, 0.0, state)
    stages = max(1, math.ceil(abs(q) / step))
    for t in range(1, stages + 1):
        state = solve_qboson(n, m, q * t / stages, state)
    return state

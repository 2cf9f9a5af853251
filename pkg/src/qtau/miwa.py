"""Generalized times (Miwa coordinates) and Schur values built from them.

``MiwaCoords`` holds the times t_1..t_{n_max} of a point set,
t_n = (1/n) * sum_j x_j^n.  Keeping them as an explicit finite tuple
makes the faithfulness requirement checkable: a Schur value computed
from times is only guaranteed to match the point-set Schur value when
n_max covers the weight of the partition, so ``schur_in_miwa`` refuses
smaller supports.

``twist`` applies the deformation T_n = (1 - Q^n) t_n used to move
between the ordinary and deformed expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .algebra_core import ZERO, det_rational, format_rational, h_from_times
from .partitions import Partition, weight


@dataclass(frozen=True)
class MiwaCoords:
    """Times t_1..t_{n_max}, exact rationals, index 1 stored first."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "values", tuple(Fraction(v) for v in self.values))

    @property
    def n_max(self) -> int:
        return len(self.values)

    def time(self, n: int) -> Fraction:
        """t_n, one-indexed; zero beyond the stored support."""
        if n < 1:
            raise ValueError("times are indexed from 1")
        if n <= len(self.values):
            return self.values[n - 1]
        return ZERO

    def __add__(self, other: "MiwaCoords") -> "MiwaCoords":
        n = max(self.n_max, other.n_max)
        return MiwaCoords(tuple(
            self.time(k) + other.time(k) for k in range(1, n + 1)))

    def __sub__(self, other: "MiwaCoords") -> "MiwaCoords":
        n = max(self.n_max, other.n_max)
        return MiwaCoords(tuple(
            self.time(k) - other.time(k) for k in range(1, n + 1)))


def zero_coords(n_max: int) -> MiwaCoords:
    return MiwaCoords((ZERO,) * n_max)


def from_points(points: Sequence, n_max: int) -> MiwaCoords:
    """t_n = (1/n) sum_j x_j^n for n = 1..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    xs = [Fraction(x) for x in points]
    values = []
    powers = list(xs)
    for n in range(1, n_max + 1):
        values.append(Fraction(sum(powers), n) if xs else ZERO)
        powers = [p * x for p, x in zip(powers, xs)]
    return MiwaCoords(tuple(values))


def pad(t: MiwaCoords, n_max: int) -> MiwaCoords:
    """Extend the support with zero times (no-op when already long enough)."""
    if t.n_max >= n_max:
        return t
    return MiwaCoords(t.values + (ZERO,) * (n_max - t.n_max))


def twist(t: MiwaCoords, q) -> MiwaCoords:
    """T_n = (1 - Q^n) t_n, componentwise on the stored support."""
    qv = Fraction(q)
    return MiwaCoords(tuple(
        (1 - qv ** n) * t.values[n - 1] for n in range(1, t.n_max + 1)))


def schur_in_miwa(lam: Partition, t: MiwaCoords) -> Fraction:
    """Schur value in generalized times: det(h_{lam_i - i + j}(t)).

    h_k(t) is the z^k coefficient of exp(sum t_k z^k).  Errors when the
    support is too small to be faithful (n_max < |lam|).
    """
    if not lam:
        return Fraction(1)
    if t.n_max < weight(lam):
        raise ValueError(
            f"times support n_max={t.n_max} is insufficient for |lam|={weight(lam)}")
    ell = len(lam)
    kmax = lam[0] + ell - 1
    hs = h_from_times(t.values, kmax)

    def h(k: int) -> Fraction:
        if k < 0:
            return ZERO
        return hs[k]

    rows = [
        [h(lam[i] - (i + 1) + (j + 1)) for j in range(ell)]
        for i in range(ell)
    ]
    return det_rational(rows)


def to_json(t: MiwaCoords) -> dict:
    return {"n_max": t.n_max, "t": [format_rational(v) for v in t.values]}

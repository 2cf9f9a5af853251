"""Symmetric-function evaluation on exact rational point sets.

Everything here is exact.  Schur values come from the bialternant when
the points are pairwise distinct and from the Jacobi-Trudi determinant
otherwise; the two routes agree and the tests exercise that.  The
Hall-Littlewood line keeps two routes as well: the S_n symmetrization
formula for distinct points, and a cached monomial-expansion table for
the degenerate ones.

The monomial tables are built from the horizontal-strip branching rule

    P_lam(x_1..x_r; Q) = sum_mu psi_{lam/mu}(Q) x_r^{|lam/mu|} P_mu(x_1..x_{r-1}; Q)

where psi picks up a factor (1 - Q^{m_j(mu)}) for every column length j
whose multiplicity grows when the strip is removed.  Setting every psi
weight to 1 turns the same recursion into semistandard-tableau counting,
which is how the (classical) Kostka numbers are produced; the tests
check both against independent brute force.

Kostka-Foulkes matrices are solved from the monomial tables: with
partitions of one weight ordered decreasing-lexicographically both the
s-to-m and P-to-m matrices are unitriangular against dominance, so the
change of basis s = K P needs nothing beyond ring operations in Z[Q].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .algebra_core import ONE, ZERO, QPoly, TruncatedSeries, det_rational
from .miwa import from_points, schur_in_miwa
from .partitions import (Partition, contains, multiplicities, normalize,
                         partitions_of, weight)

PointSet = Tuple[Fraction, ...]


def as_points(xs: Sequence) -> PointSet:
    return tuple(Fraction(x) for x in xs)


def pairwise_distinct(xs: Sequence) -> bool:
    xs = list(xs)
    return len(set(xs)) == len(xs)


def vandermonde(xs: Sequence) -> Fraction:
    """prod_{i<j} (x_i - x_j)."""
    xs = as_points(xs)
    acc = ONE
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            acc *= xs[i] - xs[j]
    return acc


# ---------------------------------------------------------------------------
# classical one-row bases
# ---------------------------------------------------------------------------


def power_sum(k: int, xs: Sequence) -> Fraction:
    if k < 0:
        raise ValueError("negative power-sum index")
    xs = as_points(xs)
    if k == 0:
        return Fraction(len(xs))
    return sum((x ** k for x in xs), ZERO)


def homogeneous_list(xs: Sequence, kmax: int) -> List[Fraction]:
    """h_0..h_kmax of the point set, by absorbing one geometric factor per point."""
    xs = as_points(xs)
    hs = [ONE] + [ZERO] * kmax
    for x in xs:
        for k in range(1, kmax + 1):
            hs[k] += x * hs[k - 1]
    return hs


def elementary_list(xs: Sequence, kmax: int) -> List[Fraction]:
    xs = as_points(xs)
    es = [ONE] + [ZERO] * kmax
    for x in xs:
        for k in range(kmax, 0, -1):
            es[k] += x * es[k - 1]
    return es


def basis_eval(basis: str, k: int, xs: Sequence) -> Fraction:
    """Evaluate p_k / e_k / h_k on a point set."""
    if k < 0:
        raise ValueError("negative degree")
    if basis in ("p", "power"):
        return power_sum(k, xs)
    if basis in ("e", "elementary"):
        return elementary_list(xs, k)[k]
    if basis in ("h", "homogeneous", "complete"):
        return homogeneous_list(xs, k)[k]
    raise ValueError(f"unknown basis {basis!r}")


def monomial_eval(mu: Partition, xs: Sequence) -> Fraction:
    """Monomial symmetric polynomial m_mu on the point set."""
    xs = as_points(xs)
    n = len(xs)
    if len(mu) > n:
        return ZERO
    padded = tuple(mu) + (0,) * (n - len(mu))
    acc = ZERO
    for expo in set(itertools.permutations(padded)):
        term = ONE
        for x, e in zip(xs, expo):
            term *= x ** e
        acc += term
    return acc


# ---------------------------------------------------------------------------
# Schur and skew Schur values
# ---------------------------------------------------------------------------


def _schur_bialternant(lam: Partition, xs: PointSet) -> Fraction:
    n = len(xs)
    padded = tuple(lam) + (0,) * (n - len(lam))
    rows = [[xs[i] ** (padded[j] + n - 1 - j) for j in range(n)]
            for i in range(n)]
    return det_rational(rows) / vandermonde(xs)


def _schur_jacobi_trudi(lam: Partition, xs: PointSet) -> Fraction:
    ell = len(lam)
    hs = homogeneous_list(xs, lam[0] + ell - 1)

    def h(k):
        return hs[k] if k >= 0 else ZERO

    rows = [[h(lam[i] - (i + 1) + (j + 1)) for j in range(ell)]
            for i in range(ell)]
    return det_rational(rows)


def schur_eval(lam: Partition, xs: Sequence) -> Fraction:
    """s_lam on the point set; zero when the partition has too many rows."""
    lam = normalize(lam)
    xs = as_points(xs)
    if len(lam) > len(xs):
        return ZERO
    if not lam:
        return ONE
    if pairwise_distinct(xs):
        return _schur_bialternant(lam, xs)
    return _schur_jacobi_trudi(lam, xs)


def skew_schur_eval(lam: Partition, mu: Partition, xs: Sequence) -> Fraction:
    """s_{lam/mu} via det(h_{lam_i - mu_j - i + j})."""
    lam = normalize(lam)
    mu = normalize(mu)
    xs = as_points(xs)
    if not contains(lam, mu):
        return ZERO
    if not lam:
        return ONE
    ell = len(lam)
    mu_padded = tuple(mu) + (0,) * (ell - len(mu))
    hs = homogeneous_list(xs, lam[0] + ell - 1)

    def h(k):
        return hs[k] if 0 <= k < len(hs) else ZERO

    rows = [[h(lam[i] - mu_padded[j] - (i + 1) + (j + 1)) for j in range(ell)]
            for i in range(ell)]
    return det_rational(rows)


# ---------------------------------------------------------------------------
# horizontal-strip machinery and the cached monomial tables
# ---------------------------------------------------------------------------


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """True when mu <= lam and lam/mu has at most one box per column."""
    if not contains(lam, mu):
        return False
    mu_padded = tuple(mu) + (0,) * (len(lam) - len(mu))
    return all(
        lam[i + 1] <= mu_padded[i] for i in range(len(lam) - 1)
    )


def _strip_predecessors(lam: Partition, size: int) -> List[Partition]:
    """All mu with lam/mu a horizontal strip of the given size."""
    if size < 0:
        return []
    ell = len(lam)
    out: List[Partition] = []

    def rec(i: int, remaining: int, prefix: Tuple[int, ...]):
        if i == ell:
            if remaining == 0:
                out.append(normalize(prefix))
            return
        lo = lam[i + 1] if i + 1 < ell else 0
        hi = lam[i]
        for mu_i in range(hi, lo - 1, -1):
            removed = lam[i] - mu_i
            if removed > remaining:
                continue
            rec(i + 1, remaining - removed, prefix + (mu_i,))

    rec(0, size, ())
    return out


def _psi_weight(lam: Partition, mu: Partition) -> QPoly:
    """Branching weight: prod over j with m_j(mu) = m_j(lam)+1 of (1 - Q^{m_j(mu)})."""
    ml = multiplicities(lam)
    mm = multiplicities(mu)
    acc = QPoly.one()
    for j, count in mm.items():
        if count == ml.get(j, 0) + 1:
            acc = acc * QPoly([1] + [0] * (count - 1) + [-1])
    return acc


@lru_cache(maxsize=None)
def _chain_sum(shape: Partition, steps: Tuple[int, ...]) -> QPoly:
    if not steps:
        return QPoly.one() if not shape else QPoly.zero()
    acc = QPoly.zero()
    for mu in _strip_predecessors(shape, steps[-1]):
        term = _psi_weight(shape, mu) * _chain_sum(mu, steps[:-1])
        acc = acc + term
    return acc


@lru_cache(maxsize=None)
def _chain_count(shape: Partition, steps: Tuple[int, ...]) -> int:
    if not steps:
        return 1 if not shape else 0
    return sum(
        _chain_count(mu, steps[:-1])
        for mu in _strip_predecessors(shape, steps[-1])
    )


@lru_cache(maxsize=None)
def hl_monomial_table(d: int) -> Dict[Partition, Dict[Partition, QPoly]]:
    """P_lam = sum_mu table[lam][mu](Q) m_mu, for all |lam| = |mu| = d."""
    lams = partitions_of(d)
    table: Dict[Partition, Dict[Partition, QPoly]] = {}
    for lam in lams:
        row: Dict[Partition, QPoly] = {}
        for mu in lams:
            c = _chain_sum(lam, mu)
            if not c.is_zero():
                row[mu] = c
        table[lam] = row
    return table


@lru_cache(maxsize=None)
def schur_monomial_table(d: int) -> Dict[Partition, Dict[Partition, int]]:
    """s_lam = sum_mu K_{lam mu} m_mu with classical Kostka numbers."""
    lams = partitions_of(d)
    table: Dict[Partition, Dict[Partition, int]] = {}
    for lam in lams:
        row: Dict[Partition, int] = {}
        for mu in lams:
            c = _chain_count(lam, mu)
            if c:
                row[mu] = c
        table[lam] = row
    return table


# ---------------------------------------------------------------------------
# Hall-Littlewood evaluation
# ---------------------------------------------------------------------------


def _v_lambda(lam: Partition, nvars: int, q: Fraction) -> Fraction:
    """Normalization prod_i v_{m_i}(q), m_0 counting the zero parts.

    v_m(q) = prod_{j<=m} (1 + q + ... + q^{j-1}); written with q-integers
    so q = 1 degenerates to m! instead of 0/0.
    """
    mult = list(multiplicities(lam).values())
    mult.append(nvars - len(lam))
    acc = ONE
    for m in mult:
        for j in range(1, m + 1):
            acc *= sum((q ** i for i in range(j)), ZERO)
    return acc


def _hl_symmetrization(lam: Partition, xs: PointSet, q: Fraction) -> Fraction:
    n = len(xs)
    padded = tuple(lam) + (0,) * (n - len(lam))
    total = ZERO
    for perm in itertools.permutations(range(n)):
        ys = [xs[i] for i in perm]
        term = ONE
        for i in range(n):
            term *= ys[i] ** padded[i]
        for i in range(n):
            for j in range(i + 1, n):
                term *= (ys[i] - q * ys[j]) / (ys[i] - ys[j])
        total += term
    return total / _v_lambda(lam, n, q)


def hall_littlewood_eval(lam: Partition, xs: Sequence, q) -> Fraction:
    """P_lam(x; Q) exactly; falls back to the monomial table on repeated points."""
    lam = normalize(lam)
    xs = as_points(xs)
    q = Fraction(q)
    if len(lam) > len(xs):
        return ZERO
    if not lam:
        return ONE
    if pairwise_distinct(xs):
        return _hl_symmetrization(lam, xs, q)
    row = hl_monomial_table(weight(lam))[lam]
    return sum((coeff(q) * monomial_eval(mu, xs) for mu, coeff in row.items()),
               ZERO)


# ---------------------------------------------------------------------------
# Kostka-Foulkes tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KostkaTables:
    """K and K^{-1} for one weight, rows and columns in ``order``."""

    weight: int
    order: Tuple[Partition, ...]
    K: Tuple[Tuple[QPoly, ...], ...]
    K_inv: Tuple[Tuple[QPoly, ...], ...]


@lru_cache(maxsize=None)
def kostka_tables(d: int) -> KostkaTables:
    """Kostka-Foulkes matrix s_lam = sum_mu K_{lam mu}(Q) P_mu and its inverse."""
    order = tuple(partitions_of(d))
    n = len(order)
    hl = hl_monomial_table(d)
    sm = schur_monomial_table(d)
    R = [[hl[order[i]].get(order[j], QPoly.zero()) for j in range(n)]
         for i in range(n)]
    S = [[QPoly.constant(sm[order[i]].get(order[j], 0)) for j in range(n)]
         for i in range(n)]
    # S = K R with R upper unitriangular, so back-substitute column by column.
    K = [[QPoly.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = S[i][j]
            for k in range(j):
                acc = acc - K[i][k] * R[k][j]
            K[i][j] = acc
    K_inv = [[QPoly.one() if i == j else QPoly.zero() for j in range(n)]
             for i in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            acc = QPoly.zero()
            for k in range(i + 1, j + 1):
                acc = acc + K[i][k] * K_inv[k][j]
            K_inv[i][j] = -acc
    for i in range(n):
        for j in range(n):
            acc = QPoly.zero()
            for k in range(n):
                acc = acc + K[i][k] * K_inv[k][j]
            expected = QPoly.one() if i == j else QPoly.zero()
            if acc != expected:
                raise ArithmeticError("Kostka inverse failed verification")
    return KostkaTables(
        weight=d,
        order=order,
        K=tuple(tuple(row) for row in K),
        K_inv=tuple(tuple(row) for row in K_inv),
    )


def kostka_tables_json(tables: KostkaTables) -> dict:
    return {
        "weight": tables.weight,
        "order": [list(lam) for lam in tables.order],
        "K": [[p.to_list() for p in row] for row in tables.K],
        "K_inv": [[p.to_list() for p in row] for row in tables.K_inv],
    }


# ---------------------------------------------------------------------------
# deformed one-row coefficients and the associated determinant family
# ---------------------------------------------------------------------------


def q_coeff_list(ys: Sequence, q, mmax: int) -> List[Fraction]:
    """Coefficients q_0..q_mmax of prod_j (1 - Q y_j z)/(1 - y_j z)."""
    ys = as_points(ys)
    q = Fraction(q)
    cs = [ONE] + [ZERO] * mmax
    for y in ys:
        qy = q * y
        for k in range(mmax, 0, -1):
            cs[k] -= qy * cs[k - 1]
        for k in range(1, mmax + 1):
            cs[k] += y * cs[k - 1]
    return cs


def q_coeff(m: int, ys: Sequence, q) -> Fraction:
    if m < 0:
        raise ValueError("negative coefficient index")
    return q_coeff_list(ys, q, m)[m]


def big_schur_eval(lam: Partition, ys: Sequence, q) -> Fraction:
    """Deformed Schur value det(q_{lam_i - i + j}) on the point set."""
    lam = normalize(lam)
    if not lam:
        return ONE
    ell = len(lam)
    cs = q_coeff_list(ys, q, lam[0] + ell - 1)

    def qc(k):
        return cs[k] if k >= 0 else ZERO

    rows = [[qc(lam[i] - (i + 1) + (j + 1)) for j in range(ell)]
            for i in range(ell)]
    return det_rational(rows)


def supersymmetric_schur_eval(lam: Partition, alpha: Sequence,
                              beta: Sequence) -> Fraction:
    """Hook Schur value s_lam(alpha/beta) through generalized times.

    The times are T_n = (1/n)(sum alpha_i^n - sum (-beta_i)^n), assembled
    from two from_points calls so there is a single code path for the
    negated contribution.
    """
    lam = normalize(lam)
    n_max = max(1, weight(lam))
    t_alpha = from_points(alpha, n_max)
    t_beta = from_points([-Fraction(b) for b in beta], n_max)
    return schur_in_miwa(lam, t_alpha - t_beta)


# ---------------------------------------------------------------------------
# formal-variable series for the graded identity checks
# ---------------------------------------------------------------------------


def xy_names(nx: int, ny: int) -> Tuple[str, ...]:
    return tuple(f"x{i+1}" for i in range(nx)) + tuple(f"y{j+1}" for j in range(ny))


def monomial_series(mu: Partition, names: Sequence[str], cutoff: int,
                    positions: Sequence[int] | None = None) -> TruncatedSeries:
    """m_mu as a series in the variables at the given positions."""
    names = tuple(names)
    slots = tuple(positions) if positions is not None else tuple(range(len(names)))
    if len(mu) > len(slots):
        return TruncatedSeries.zero(names, cutoff)
    padded = tuple(mu) + (0,) * (len(slots) - len(mu))
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for perm in set(itertools.permutations(padded)):
        expo = [0] * len(names)
        for slot, e in zip(slots, perm):
            expo[slot] = e
        terms[tuple(expo)] = ONE
    return TruncatedSeries(names, cutoff, terms)


def schur_series(lam: Partition, names: Sequence[str], cutoff: int,
                 positions: Sequence[int] | None = None) -> TruncatedSeries:
    lam = normalize(lam)
    names = tuple(names)
    if not lam:
        return TruncatedSeries.one(names, cutoff)
    acc = TruncatedSeries.zero(names, cutoff)
    for mu, count in schur_monomial_table(weight(lam))[lam].items():
        acc = acc + monomial_series(mu, names, cutoff, positions).scale(count)
    return acc


def hl_series(lam: Partition, names: Sequence[str], cutoff: int, q,
              positions: Sequence[int] | None = None) -> TruncatedSeries:
    lam = normalize(lam)
    names = tuple(names)
    q = Fraction(q)
    if not lam:
        return TruncatedSeries.one(names, cutoff)
    acc = TruncatedSeries.zero(names, cutoff)
    for mu, coeff in hl_monomial_table(weight(lam))[lam].items():
        value = coeff(q)
        if value != 0:
            acc = acc + monomial_series(mu, names, cutoff, positions).scale(value)
    return acc


def cauchy_kernel_series(nx: int, ny: int, cutoff: int, q=ZERO) -> TruncatedSeries:
    """prod_{j,k} (1 - Q x_j y_k)/(1 - x_j y_k) through the cutoff."""
    names = xy_names(nx, ny)
    q = Fraction(q)
    acc = TruncatedSeries.one(names, cutoff)
    for j in range(nx):
        for k in range(ny):
            geom: Dict[Tuple[int, ...], Fraction] = {}
            for p in range(cutoff // 2 + 1):
                expo = [0] * (nx + ny)
                expo[j] = p
                expo[nx + k] = p
                geom[tuple(expo)] = ONE
            acc = acc * TruncatedSeries(names, cutoff, geom)
            if q != 0:
                expo = [0] * (nx + ny)
                expo[j] = 1
                expo[nx + k] = 1
                factor = TruncatedSeries(
                    names, cutoff,
                    {(0,) * (nx + ny): ONE, tuple(expo): -q})
                acc = acc * factor
    return acc

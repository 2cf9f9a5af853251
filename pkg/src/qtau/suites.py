"""Named verification suites behind the `qtau verify` subcommand.

Each suite bundles the identity checks of one module family into a
deterministic, seeded run that produces a Report.  Checks carry a short
identity tag (the `paper_ref` report field) naming the fact being
exercised, so a report is readable on its own.

Determinism matters more than coverage breadth here: the same seed and
config must reproduce the same report byte for byte, so all sampling
goes through one seeded generator, all rationals are formatted with
format_rational, and floats are printed with a fixed format.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra_core import QPoly, TruncatedSeries, format_rational
from .partitions import b_lambda, enumerate_in_box, partitions_of, weight
from .phase_model import (BoxSpec, correlation_Am, correlation_Am_power_column,
                          correlation_skew, factorization_report,
                          giambelli_check, matrix_integral_constant_term,
                          scalar_product, schur_pair_sum_miwa)
from .qboson_model import (MODES, QBosonSpec, c_tilde_matrix,
                           mode_agreement_report, scalar_product_q)
from .symfunc import (big_schur_eval, cauchy_kernel_series,
                      hall_littlewood_eval, hl_series, kostka_tables,
                      schur_eval, supersymmetric_schur_eval, vandermonde,
                      xy_names)
from .miwa import from_points, schur_in_miwa, twist
from . import bethe as bethe_mod
from . import fock_oracle as oracle

DEFAULT_Q_VALUES = (Fraction(1, 4), Fraction(1, 3), Fraction(2, 5))


def desk_caps() -> Tuple[int, int, int]:
    """(N, M, degree) ceilings; QTAU_MAX_SIZE raises all three."""
    raw = os.environ.get("QTAU_MAX_SIZE")
    if raw:
        v = int(raw)
        return (max(4, v), max(6, v), max(8, v))
    return (4, 6, 8)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    n_max: int = 3
    m_max: int = 4
    cutoff: int = 6
    q_values: Tuple[Fraction, ...] = DEFAULT_Q_VALUES
    seed: int = 0
    trials: int = 5
    out: Optional[str] = None

    def __post_init__(self):
        cap_n, cap_m, cap_d = desk_caps()
        if self.n_max > cap_n or self.m_max > cap_m or self.cutoff > cap_d:
            raise ValueError(
                "bounds exceed the desk-scale caps "
                f"(N<={cap_n}, M<={cap_m}, D<={cap_d}); "
                "set QTAU_MAX_SIZE to override")
        if self.n_max < 1 or self.m_max < 0 or self.cutoff < 0:
            raise ValueError("bounds must be positive")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        object.__setattr__(self, "q_values",
                           tuple(Fraction(q) for q in self.q_values))


@dataclass(frozen=True)
class CheckResult:
    name: str
    paper_ref: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Report:
    suite: str
    seed: int
    checks: Tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


# a fixed pool of positive rationals; positivity keeps determinant
# denominators away from zero in the deformed checks
_POOL = sorted({Fraction(p, q) for p in range(1, 10) for q in range(1, 10)})


def _sample(rng: random.Random, n: int) -> List[Fraction]:
    return rng.sample(_POOL, n)


def _fmt_points(points: Sequence[Fraction]) -> str:
    return ",".join(format_rational(p) for p in points)


# ---------------------------------------------------------------------------
# phase-scalar
# ---------------------------------------------------------------------------


def _suite_phase_scalar(cfg: SuiteConfig, rng: random.Random):
    checks = []
    for n in range(1, min(3, cfg.n_max) + 1):
        for m in range(1, min(4, cfg.m_max) + 1):
            box = BoxSpec(n, m)
            ok = True
            for _ in range(cfg.trials):
                xs, ys = _sample(rng, n), _sample(rng, n)
                if (scalar_product(xs, ys, box, mode="det")
                        != scalar_product(xs, ys, box, mode="schur_sum")):
                    ok = False
            checks.append(CheckResult(
                f"scalar-det-vs-sum-N{n}-M{m}", "det-kernel/box-schur-sum",
                ok, f"{cfg.trials} random point pairs"))
    box = BoxSpec(2, 2)
    try:
        scalar_product([Fraction(1, 2), Fraction(1, 2)],
                       [Fraction(1, 3), Fraction(1, 4)], box, mode="det")
        rejected = False
    except ValueError:
        rejected = True
    sum_ok = scalar_product(
        [Fraction(1, 2), Fraction(1, 2)],
        [Fraction(1, 3), Fraction(1, 4)], box, mode="schur_sum") is not None
    checks.append(CheckResult(
        "scalar-det-rejects-repeated-points", "det-kernel/preconditions",
        rejected and sum_ok,
        "det mode errors on coincident points; sum mode does not"))
    return checks


# ---------------------------------------------------------------------------
# phase-corr
# ---------------------------------------------------------------------------


def _suite_phase_corr(cfg: SuiteConfig, rng: random.Random):
    checks = []
    box = BoxSpec(2, 3)
    for site in range(box.m + 1):
        ok = True
        for _ in range(cfg.trials):
            xs, ys = _sample(rng, 2), _sample(rng, 1)
            det = correlation_Am(xs, ys, site, box, mode="det")
            sk = correlation_Am(xs, ys, site, box, mode="skew_sum")
            orc = oracle.oracle_pairing("phase", box, xs, ys, insertion=site)
            if not det == sk == orc:
                ok = False
        checks.append(CheckResult(
            f"corr-Am-three-routes-m{site}", "one-point-function/det-vs-sum",
            ok, f"det = skew-sum = oracle, {cfg.trials} point sets"))

    xs, ys = _sample(rng, 2), _sample(rng, 2)
    empty = correlation_skew((), (), xs, ys, box)
    base = scalar_product(xs, ys, box, mode="schur_sum")
    checks.append(CheckResult(
        "corr-skew-empty-equals-scalar", "skew-expansion/vacuum-case",
        empty == base, "A with empty shapes reduces to the scalar product"))

    # the product form is a genuine infinite-volume statement; at desk
    # scale it fails, and the suite pins the measured outcome
    measured = []
    for lam1, lam2 in (((1,), (2,)), ((2, 1), (1, 1)), ((), ())):
        rep = factorization_report(lam1, lam2, xs, ys, box)
        measured.append(bool(rep["equal"]))
    checks.append(CheckResult(
        "corr-skew-factorization-measured", "skew-factorization/finite-size",
        measured == [False, False, True],
        f"norm*skew-sum product form equal flags {measured} "
        "for shapes (1)|(2), (21)|(11), empty|empty"))

    xs0 = [Fraction(2), Fraction(3)]
    ys0 = [Fraction(5)]
    true0 = correlation_Am(xs0, ys0, 0, box, mode="det")
    pc0 = correlation_Am_power_column(xs0, ys0, 0, box)
    checks.append(CheckResult(
        "corr-power-column-variant-measured", "one-point-function/variant",
        pc0 != true0,
        "power-column determinant is a distinct quantity: "
        f"{format_rational(pc0)} vs {format_rational(true0)} at a pinned "
        "point"))
    return checks


# ---------------------------------------------------------------------------
# hl-cauchy
# ---------------------------------------------------------------------------


def _suite_hl_cauchy(cfg: SuiteConfig, rng: random.Random):
    checks = []
    sizes = [(1, 3), (2, 2), (2, 3), (3, 2)]
    for n, m in sizes:
        if n > cfg.n_max or m > cfg.m_max:
            continue
        window = min(m, cfg.cutoff, 6)
        names = xy_names(n, n)
        for q in cfg.q_values:
            total = TruncatedSeries.zero(names, 2 * window)
            for lam in enumerate_in_box(n, m):
                if weight(lam) > window:
                    continue
                bl = b_lambda(lam)(q)
                px = hl_series(lam, names, 2 * window, q,
                               positions=range(n))
                py = hl_series(lam, names, 2 * window, q,
                               positions=range(n, 2 * n))
                total = total + bl * px * py
            kernel = cauchy_kernel_series(n, n, 2 * window, q=q)
            ok = kernel.agrees_through(total, 2 * window)
            checks.append(CheckResult(
                f"hl-cauchy-window-N{n}-M{m}-Q{format_rational(q)}",
                "cauchy-hl/graded-window", ok,
                f"box sum = kernel through diagonal degree {window}"))
    return checks


# ---------------------------------------------------------------------------
# qboson-modes
# ---------------------------------------------------------------------------


def _suite_qboson_modes(cfg: SuiteConfig, rng: random.Random):
    checks = []
    sizes = [(1, 2), (2, 2), (2, 3)]
    for n, m in sizes:
        if n > cfg.n_max or m > cfg.m_max:
            continue
        for q in cfg.q_values:
            spec = QBosonSpec(BoxSpec(n, m), q)
            xs, ys = _sample(rng, n), _sample(rng, n)
            rep = mode_agreement_report(xs, ys, spec)
            graded = rep["graded_equal_hl"]
            exact = rep["exact_equal_hl"]
            exact_tags = ",".join(
                mode for mode, flag in sorted(exact.items()) if not flag)
            checks.append(CheckResult(
                f"qmode-graded-window-N{n}-M{m}-Q{format_rational(q)}",
                "q-inner/graded-window",
                all(graded.values()),
                "all four modes agree through degree "
                f"{rep['graded_window']}; full-sum disagreements "
                f"(measured, expected): [{exact_tags}]"))
        spec0 = QBosonSpec(BoxSpec(n, m), Fraction(0))
        xs, ys = _sample(rng, n), _sample(rng, n)
        base = scalar_product(xs, ys, BoxSpec(n, m), mode="det")
        ok = all(
            scalar_product_q(xs, ys, spec0, mode) == base for mode in MODES)
        checks.append(CheckResult(
            f"qmode-q0-reduction-N{n}-M{m}", "q-inner/Q-to-0",
            ok, "every mode reproduces the undeformed determinant at Q=0"))

    spec1 = QBosonSpec(BoxSpec(2, 2), Fraction(1))
    xs, ys = _sample(rng, 2), _sample(rng, 2)
    collapse = scalar_product_q(xs, ys, spec1, mode="hl_sum")
    checks.append(CheckResult(
        "qmode-q1-collapse", "q-inner/Q-to-1",
        collapse == 1, "hl_sum at Q=1 collapses to 1 (all norms vanish)"))

    spec = QBosonSpec(BoxSpec(2, 3), Fraction(1, 3))
    xs, ys = _sample(rng, 2), _sample(rng, 2)
    sym = (scalar_product_q(xs, ys, spec, "hl_sum")
           == scalar_product_q(list(reversed(xs)), ys, spec, "hl_sum")
           == scalar_product_q(xs, list(reversed(ys)), spec, "hl_sum"))
    checks.append(CheckResult(
        "qmode-permutation-symmetry", "q-inner/symmetry",
        sym, "pairing is symmetric in each point set"))

    ok = True
    details = []
    for n in range(1, min(4, cfg.n_max) + 1):
        ys = _sample(rng, n)
        q = Fraction(2, 7)
        lhs = vandermonde([q * y for y in ys])
        rhs = q ** (n * (n - 1) // 2) * vandermonde(ys)
        if lhs != rhs:
            ok = False
        details.append(f"N={n}")
    checks.append(CheckResult(
        "vandermonde-scaling", "det-quotient/prefactor",
        ok, "Delta(Qy) = Q^(N(N-1)/2) Delta(y) for " + ", ".join(details)))
    return checks


# ---------------------------------------------------------------------------
# kostka
# ---------------------------------------------------------------------------


def _ssyt_count(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    """Brute-force count of semistandard tableaux of shape lam, content mu."""
    cells = [(r, c) for r, row_len in enumerate(lam) for c in range(row_len)]
    remaining = list(mu)
    grid = [[0] * row_len for row_len in lam]

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for v in range(lo, len(mu) + 1):
            if remaining[v - 1] > 0:
                remaining[v - 1] -= 1
                grid[r][c] = v
                total += rec(k + 1)
                remaining[v - 1] += 1
        return total

    return rec(0)


def _suite_kostka(cfg: SuiteConfig, rng: random.Random):
    checks = []
    d_top = min(cfg.cutoff, 6)
    for d in range(0, d_top + 1):
        tables = kostka_tables(d)
        order = tables.order
        size = len(order)
        unitri = all(
            tables.K[i][i] == 1
            and all(tables.K[i][j].is_zero() for j in range(i))
            for i in range(size))
        checks.append(CheckResult(
            f"kostka-unitriangular-d{d}", "kostka-foulkes/unitriangular",
            unitri, f"{size} partitions of {d}"))

        prod_ok = True
        for i in range(size):
            for j in range(size):
                acc = sum(
                    (tables.K[i][k] * tables.K_inv[k][j]
                     for k in range(size)),
                    start=tables.K[i][i] * 0)
                if acc != (1 if i == j else 0):
                    prod_ok = False
        checks.append(CheckResult(
            f"kostka-inverse-d{d}", "kostka-foulkes/inverse",
            prod_ok, "K * K_inv = identity, exact polynomial arithmetic"))

        if d <= 5:
            classical_ok = True
            for i, lam in enumerate(order):
                for j, mu in enumerate(order):
                    if tables.K[i][j](Fraction(1)) != _ssyt_count(lam, mu):
                        classical_ok = False
            checks.append(CheckResult(
                f"kostka-classical-d{d}", "kostka-foulkes/Q-to-1",
                classical_ok,
                "K(1) equals the brute-force tableau count"))
    for d in range(0, d_top + 1):
        try:
            c_tilde_matrix(d)
            ok = True
        except ArithmeticError:
            ok = False
        checks.append(CheckResult(
            f"kostka-ctilde-identity-d{d}", "schur-coefficient-matrix/inverse",
            ok, "c-tilde passes diag(b) and cleared-inverse identities"))

    t2 = kostka_tables(2)
    i = t2.order.index((2,))
    j = t2.order.index((1, 1))
    checks.append(CheckResult(
        "kostka-example-weight2", "kostka-foulkes/example",
        t2.K[i][j] == QPoly.gen(), "K_(2),(11)(Q) = Q"))
    return checks


# ---------------------------------------------------------------------------
# supersym
# ---------------------------------------------------------------------------


def _suite_supersym(cfg: SuiteConfig, rng: random.Random):
    checks = []
    shapes = [lam for d in range(0, min(cfg.cutoff, 6) + 1)
              for lam in partitions_of(d)]
    q_pool = [Fraction(1, 4), Fraction(1, 3), Fraction(2, 5), Fraction(3, 7),
              Fraction(5, 9), Fraction(1, 6)]
    for trial in range(max(cfg.trials, 10)):
        ys = _sample(rng, 3)
        q = q_pool[trial % len(q_pool)]
        ok = True
        for lam in shapes:
            big = big_schur_eval(lam, ys, q)
            hook = supersymmetric_schur_eval(lam, ys, [-q * y for y in ys])
            times = twist(from_points(ys, max(1, weight(lam))), q)
            miwa = schur_in_miwa(lam, times)
            if not big == hook == miwa:
                ok = False
        checks.append(CheckResult(
            f"supersym-identification-trial{trial}",
            "deformed-schur/hook-schur",
            ok,
            f"all |lam| <= {min(cfg.cutoff, 6)} at y=({_fmt_points(ys)}), "
            f"Q={format_rational(q)}"))
    return checks


# ---------------------------------------------------------------------------
# giambelli
# ---------------------------------------------------------------------------


def _suite_giambelli(cfg: SuiteConfig, rng: random.Random):
    checks = []
    shapes = [lam for d in range(0, min(cfg.cutoff + 2, 8) + 1)
              for lam in partitions_of(d)]
    for trial in range(cfg.trials):
        ys = _sample(rng, 3)
        ok = all(giambelli_check(ys, lam) for lam in shapes)
        checks.append(CheckResult(
            f"giambelli-trial{trial}", "tau-coefficients/hook-minors",
            ok, f"{len(shapes)} shapes at y=({_fmt_points(ys)})"))
    return checks


# ---------------------------------------------------------------------------
# oracle-cross
# ---------------------------------------------------------------------------


def _suite_oracle_cross(cfg: SuiteConfig, rng: random.Random):
    checks = []
    for n in range(1, min(3, cfg.n_max) + 1):
        for m in range(1, min(3, cfg.m_max) + 1):
            box = BoxSpec(n, m)
            ok = True
            for _ in range(cfg.trials):
                xs, ys = _sample(rng, n), _sample(rng, n)
                val = oracle.oracle_pairing("phase", box, xs, ys)
                if (val != scalar_product(xs, ys, box, mode="det")
                        or val != scalar_product(xs, ys, box,
                                                 mode="schur_sum")):
                    ok = False
            checks.append(CheckResult(
                f"oracle-scalar-N{n}-M{m}", "oracle/scalar-product",
                ok, f"{cfg.trials} random point pairs, both formula modes"))

    box = BoxSpec(3, 3)
    us = _sample(rng, 3)
    vec = oracle.bethe_state("phase", box, us)
    basis = oracle.sector_basis(3, 3)
    coeffs = oracle.partition_coefficients(basis, vec, 3)
    ys = [u * u for u in us]
    ok = all(c == schur_eval(lam, ys) for lam, c in coeffs.items())
    checks.append(CheckResult(
        "oracle-bethe-coefficients", "bethe-state/schur-coefficients",
        ok, "creation-string coefficients are the Schur values"))

    box = BoxSpec(2, 3)
    ok = True
    for site in range(box.m + 1):
        xs, ys = _sample(rng, 2), _sample(rng, 1)
        if (oracle.oracle_pairing("phase", box, xs, ys, insertion=site)
                != correlation_Am(xs, ys, site, box, mode="det")):
            ok = False
    checks.append(CheckResult(
        "oracle-correlation-insertion", "oracle/one-point-function",
        ok, "creation insertion against the determinant route, all sites"))

    for q in cfg.q_values:
        ok = True
        for n, m in ((1, 3), (2, 2), (2, 3)):
            if n > cfg.n_max or m > cfg.m_max:
                continue
            spec = QBosonSpec(BoxSpec(n, m), q)
            xs, ys = _sample(rng, n), _sample(rng, n)
            if (oracle.oracle_pairing("qboson", spec, xs, ys)
                    != scalar_product_q(xs, ys, spec, mode="hl_sum")):
                ok = False
        checks.append(CheckResult(
            f"oracle-qboson-normalized-Q{format_rational(q)}",
            "oracle/deformed-pairing", ok,
            "normalized pairing equals the Hall-Littlewood sum"))

    q = Fraction(1, 3)
    spec = QBosonSpec(BoxSpec(2, 3), q)
    us = _sample(rng, 2)
    vec = oracle.bethe_state("qboson", spec, us)
    basis = oracle.sector_basis(2, 3)
    coeffs = oracle.partition_coefficients(basis, vec, 2)
    ys = [u * u for u in us]
    ok = all(
        c == b_lambda(lam)(q) * hall_littlewood_eval(lam, ys, q)
        for lam, c in coeffs.items())
    checks.append(CheckResult(
        "oracle-qboson-string-law", "bethe-state/hl-coefficients",
        ok, "deformed string coefficients are b_lam(Q) * P_lam(y;Q) "
        "(recorded proportionality)"))

    y1, y2 = _sample(rng, 2)
    comm_ok = (oracle.commutation_check("phase", BoxSpec(3, 2), y1, y2)
               and oracle.commutation_check(
                   "qboson", QBosonSpec(BoxSpec(3, 2), Fraction(1, 4)),
                   y1, y2))
    checks.append(CheckResult(
        "oracle-commutation", "string-operators/commutativity",
        comm_ok, "[B(y1), B(y2)] = 0 on the truncated basis, both models"))

    mono = oracle.build_monodromy("phase", BoxSpec(2, 2), Fraction(1, 2))
    grading_ok = (
        all(op.target == op.source + 1 for op in mono.b)
        and all(op.target == op.source - 1 for op in mono.c)
        and all(op.target == op.source for op in mono.a + mono.d))
    checks.append(CheckResult(
        "oracle-grading-structure", "monodromy/particle-grading",
        grading_ok, "b raises, c lowers, a and d preserve the sector"))
    return checks


# ---------------------------------------------------------------------------
# matrix-integral
# ---------------------------------------------------------------------------


def _suite_matrix_integral(cfg: SuiteConfig, rng: random.Random):
    checks = []
    cutoff = min(cfg.cutoff, 6)
    den_pool = [2, 3, 5, 7, 4, 9, 8, 6]
    t = [Fraction(rng.choice((-1, 1)), den_pool[k % len(den_pool)])
         for k in range(cutoff)]
    tp = [Fraction(rng.choice((-1, 1)), den_pool[(k + 3) % len(den_pool)])
          for k in range(cutoff)]
    for n in (1, 2):
        target = schur_pair_sum_miwa(n, t, tp, cutoff)
        plus = matrix_integral_constant_term(n, t, tp, cutoff,
                                             sign_convention="plus")
        minus = matrix_integral_constant_term(n, t, tp, cutoff,
                                              sign_convention="minus")
        checks.append(CheckResult(
            f"integral-constant-term-N{n}", "matrix-integral/constant-term",
            plus == target,
            f"plus convention matches the row-bounded Schur pair sum "
            f"at cutoff {cutoff}"))
        checks.append(CheckResult(
            f"integral-convention-unique-N{n}",
            "matrix-integral/sign-convention",
            minus != target,
            "minus convention is measurably different (recorded)"))
    return checks


# ---------------------------------------------------------------------------
# bethe
# ---------------------------------------------------------------------------


def _suite_bethe(cfg: SuiteConfig, rng: random.Random):
    import math

    checks = []
    ok = True
    for m in range(0, min(6, cfg.m_max) + 1):
        br = bethe_mod.solve_phase(1, m, [2])
        expect = complex(math.cos(2 * math.pi * 2 / (m + 1)),
                         math.sin(2 * math.pi * 2 / (m + 1)))
        if abs(br.roots[0] - expect) > 1e-12:
            ok = False
    checks.append(CheckResult(
        "bethe-roots-of-unity", "bethe-equations/N1",
        ok, "single-particle roots are exact (M+1)-th roots of unity"))

    worst = 0.0
    mods_ok = True
    for n in range(1, min(3, cfg.n_max) + 1):
        for m in range(0, min(6, cfg.m_max) + 1):
            br = bethe_mod.solve_phase(n, m, list(range(n)))
            worst = max(worst, br.residual)
            if any(abs(abs(z) - 1) > 1e-12 for z in br.roots):
                mods_ok = False
    checks.append(CheckResult(
        "bethe-phase-residuals", "bethe-equations/residuals",
        worst < 1e-10 and mods_ok,
        f"worst residual {worst:.3e}; all roots on the unit circle"))

    br = bethe_mod.solve_phase(3, 4, [0, 1, 2])
    lhs = math.prod(z ** (3 + 4) for z in br.roots)
    rhs = math.prod(br.roots) ** 2
    checks.append(CheckResult(
        "bethe-consistency-product", "bethe-equations/product-relation",
        abs(lhs - rhs) < 1e-10,
        "product of all equations closes to the aggregate relation"))

    cont_ok = True
    worst_c = 0.0
    for n, m in ((2, 2), (2, 4), (3, 3)):
        if n > cfg.n_max or m > cfg.m_max:
            continue
        state = bethe_mod.solve_phase(n, m, list(range(n)))
        q = 0.0
        while q < 0.3 - 1e-12:
            q = min(0.3, q + 0.05)
            state = bethe_mod.solve_qboson(n, m, q, state)
            worst_c = max(worst_c, state.residual)
            if state.residual >= 1e-10:
                cont_ok = False
    checks.append(CheckResult(
        "bethe-qboson-continuation", "bethe-equations/deformed",
        cont_ok, f"Q: 0 -> 0.3 in steps of 0.05, worst residual "
        f"{worst_c:.3e}"))

    ph = bethe_mod.solve_phase(2, 3, [0, 1])
    qb = bethe_mod.solve_qboson(2, 3, 0.0, ph)
    drift = max(abs(a - b) for a, b in zip(ph.roots, qb.roots))
    checks.append(CheckResult(
        "bethe-qboson-q0-match", "bethe-equations/Q-to-0",
        drift < 1e-12, f"solver fixed point at Q=0, drift {drift:.3e}"))
    return checks


SUITES: Dict[str, Callable[[SuiteConfig, random.Random], List[CheckResult]]]
SUITES = {
    "phase-scalar": _suite_phase_scalar,
    "phase-corr": _suite_phase_corr,
    "hl-cauchy": _suite_hl_cauchy,
    "qboson-modes": _suite_qboson_modes,
    "kostka": _suite_kostka,
    "supersym": _suite_supersym,
    "giambelli": _suite_giambelli,
    "oracle-cross": _suite_oracle_cross,
    "matrix-integral": _suite_matrix_integral,
    "bethe": _suite_bethe,
}


def run_suite(config: SuiteConfig) -> Report:
    if config.suite not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValueError(f"unknown suite {config.suite!r} (known: {known})")
    rng = random.Random(config.seed)
    checks = SUITES[config.suite](config, rng)
    return Report(suite=config.suite, seed=config.seed, checks=tuple(checks))


def emit_report(report: Report, fmt: str = "json") -> str:
    import json

    if fmt == "json":
        payload = {
            "suite": report.suite,
            "seed": report.seed,
            "checks": [
                {
                    "name": c.name,
                    "paper_ref": c.paper_ref,
                    "pass": c.passed,
                    "detail": c.detail,
                }
                for c in report.checks
            ],
            "all_pass": report.all_pass,
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "text":
        if not report.checks:
            return f"suite {report.suite}: no checks\n"
        w_name = max(len(c.name) for c in report.checks)
        w_ref = max(len(c.paper_ref) for c in report.checks)
        lines = []
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"{c.name:<{w_name}}  {c.paper_ref:<{w_ref}}  {status}  "
                f"{c.detail}")
        lines.append(
            f"suite {report.suite}: "
            + ("all checks passed" if report.all_pass else "FAILURES"))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")

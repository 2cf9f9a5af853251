"""Exact arithmetic carriers used everywhere else in the package.

Three representations, all built on ``fractions.Fraction`` so that every
computation downstream is exact:

  * ``ExactScalar`` -- alias for ``Fraction``.  Scalars are kept in lowest
    terms with a positive denominator by the stdlib itself.
  * ``QPoly`` -- a univariate polynomial in the deformation parameter,
    stored densely as a tuple of coefficients, constant term first, with
    no trailing zeros.  The zero polynomial is the empty tuple.
  * ``TruncatedSeries`` -- a multivariate power series truncated at a
    fixed total degree.  Terms live in a dict mapping exponent tuples to
    nonzero coefficients; anything past the cutoff is dropped on
    construction, so products re-truncate automatically.

The module also carries the small amount of exact linear algebra the
rest of the package needs (determinants over the rationals and over a
commutative ring, power-series division) plus the generating series
exp(sum_k t_k z^k) used by the Miwa-coordinate code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

ExactScalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render an exact rational as "p/q" (or "p" when the denominator is 1)."""
    return str(Fraction(value))


# ---------------------------------------------------------------------------
# univariate polynomials in the deformation parameter
# ---------------------------------------------------------------------------


class QPoly:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficients are constant-term first.  Instances are immutable and
    hashable so they can sit inside cached tables.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(())

    @staticmethod
    def one() -> "QPoly":
        return QPoly((1,))

    @staticmethod
    def constant(c) -> "QPoly":
        return QPoly((Fraction(c),))

    @staticmethod
    def gen() -> "QPoly":
        """The polynomial Q itself."""
        return QPoly((0, 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(
            (self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly((-c for c in self.coeffs))

    def __sub__(self, other) -> "QPoly":
        return self + (-_as_qpoly(other))

    def __rsub__(self, other) -> "QPoly":
        return _as_qpoly(other) + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        if not self.coeffs or not other.coeffs:
            return QPoly(())
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, q) -> Fraction:
        """Evaluate at an exact rational point (Horner)."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"

    def to_list(self):
        """Coefficients constant-first, as plain strings (JSON friendly)."""
        return [format_rational(c) for c in self.coeffs]


def _as_qpoly(value) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return QPoly.constant(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to QPoly")


def qpoly_eval(p: QPoly, q) -> Fraction:
    return p(Fraction(q))


# ---------------------------------------------------------------------------
# truncated multivariate power series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Multivariate power series, truncated at a fixed total degree.

    ``variables`` is an ordered tuple of names; ``terms`` maps exponent
    tuples (one slot per variable) to nonzero Fraction coefficients.
    Any term of total degree above ``cutoff`` is discarded.
    """

    __slots__ = ("variables", "cutoff", "terms")

    def __init__(self, variables: Sequence[str], cutoff: int,
                 terms: Dict[Tuple[int, ...], Fraction] | None = None):
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        vs = tuple(variables)
        kept: Dict[Tuple[int, ...], Fraction] = {}
        for expo, coeff in (terms or {}).items():
            if len(expo) != len(vs):
                raise ValueError("exponent arity does not match variables")
            if sum(expo) > cutoff:
                continue
            c = Fraction(coeff)
            if c != 0:
                kept[tuple(expo)] = c
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "cutoff", cutoff)
        object.__setattr__(self, "terms", kept)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str], cutoff: int) -> "TruncatedSeries":
        return TruncatedSeries(variables, cutoff, {})

    @staticmethod
    def one(variables: Sequence[str], cutoff: int) -> "TruncatedSeries":
        zero_expo = (0,) * len(tuple(variables))
        return TruncatedSeries(variables, cutoff, {zero_expo: ONE})

    @staticmethod
    def variable(variables: Sequence[str], cutoff: int, name: str) -> "TruncatedSeries":
        vs = tuple(variables)
        expo = [0] * len(vs)
        expo[vs.index(name)] = 1
        return TruncatedSeries(vs, cutoff, {tuple(expo): ONE})

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: "TruncatedSeries"):
        if self.variables != other.variables:
            raise ValueError("series are over different variable lists")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        cutoff = min(self.cutoff, other.cutoff)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, ZERO) + coeff
        return TruncatedSeries(self.variables, cutoff, terms)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.variables, self.cutoff,
            {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        cutoff = min(self.cutoff, other.cutoff)
        terms: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > cutoff:
                    continue
                expo = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(expo)
                terms[expo] = c1 * c2 if acc is None else acc + c1 * c2
        return TruncatedSeries(self.variables, cutoff, terms)

    __rmul__ = __mul__

    def scale(self, scalar) -> "TruncatedSeries":
        s = Fraction(scalar)
        return TruncatedSeries(
            self.variables, self.cutoff,
            {e: c * s for e, c in self.terms.items()})

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), ZERO)

    def component(self, degree: int) -> Dict[Tuple[int, ...], Fraction]:
        """All terms of the given total degree."""
        return {e: c for e, c in self.terms.items() if sum(e) == degree}

    def agrees_through(self, other: "TruncatedSeries", degree: int) -> bool:
        """True when the two series have identical terms of total degree <= degree."""
        self._check_compatible(other)
        if degree > min(self.cutoff, other.cutoff):
            raise ValueError("window exceeds a cutoff; comparison would be vacuous")
        for e, c in self.terms.items():
            if sum(e) <= degree and other.terms.get(e, ZERO) != c:
                return False
        for e, c in other.terms.items():
            if sum(e) <= degree and self.terms.get(e, ZERO) != c:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.variables == other.variables
                and self.cutoff == other.cutoff
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.variables, self.cutoff,
                     tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return (f"TruncatedSeries(vars={self.variables!r}, "
                f"cutoff={self.cutoff}, nterms={len(self.terms)})")


def series_product(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product of two series; truncates to the smaller cutoff.

    Raises ValueError when the variable lists differ.
    """
    return a * b


# ---------------------------------------------------------------------------
# generating series of complete symmetric polynomials from generalized times
# ---------------------------------------------------------------------------


def h_from_times(times: Sequence, kmax: int):
    """Coefficients h_0..h_kmax of exp(sum_{k>=1} t_k z^k).

    ``times`` lists t_1, t_2, ... (missing entries are zero).  The
    recurrence j*h_j = sum_{k=1..j} k*t_k*h_{j-k} is the standard Newton
    identity once k*t_k is read as the k-th power sum.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    ts = [Fraction(t) for t in times]
    hs = [ONE]
    for j in range(1, kmax + 1):
        acc = ZERO
        for k in range(1, j + 1):
            if k <= len(ts) and ts[k - 1] != 0:
                acc += k * ts[k - 1] * hs[j - k]
        hs.append(acc / j)
    return hs


def exp_generating(times, cutoff: int) -> TruncatedSeries:
    """exp(sum_k t_k z^k) as a truncated series in the single variable z.

    ``times`` may be a plain sequence of t_1..t_n or any object with a
    ``values`` attribute holding one (MiwaCoords qualifies).
    """
    values = getattr(times, "values", times)
    hs = h_from_times(values, cutoff)
    return TruncatedSeries(
        ("z",), cutoff, {(k,): h for k, h in enumerate(hs)})


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def det_rational(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square Fraction matrix by fraction-exact elimination."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return ONE
    a = [[Fraction(x) for x in row] for row in rows]
    det = ONE
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return ZERO
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            factor = a[r][col] * inv
            for c in range(col, n):
                a[r][c] -= factor * a[col][c]
    return det


def det_ring(rows: Sequence[Sequence], one=None):
    """Determinant by cofactor expansion, using only +, -, *.

    Works for entries in any commutative ring (QPoly in practice).  Meant
    for small matrices; the rational path should use det_rational.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        if one is None:
            raise ValueError("need an explicit ring unit for the 0x0 determinant")
        return one
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        minor = [
            [rows[r][c] for c in range(n) if c != j]
            for r in range(1, n)
        ]
        term = rows[0][j] * det_ring(minor, one)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def power_series_div(num: Sequence, den: Sequence, order: int):
    """Coefficients of num/den as power series, through the given order.

    Requires den[0] != 0.  Inputs are coefficient lists, constant first;
    missing trailing coefficients are treated as zero.
    """
    if not den or Fraction(den[0]) == 0:
        raise ZeroDivisionError("series division needs a unit constant term")
    a = [Fraction(num[k]) if k < len(num) else ZERO for k in range(order + 1)]
    b = [Fraction(den[k]) if k < len(den) else ZERO for k in range(order + 1)]
    inv0 = 1 / b[0]
    out = []
    for k in range(order + 1):
        acc = a[k]
        for i in range(k):
            acc -= out[i] * b[k - i]
        out.append(acc * inv0)
    return out


def mat_mul_ring(a, b):
    """Product of two matrices with ring-element entries (lists of lists)."""
    if not a or not b:
        return []
    rows, mid, cols = len(a), len(b), len(b[0])
    for row in a:
        if len(row) != mid:
            raise ValueError("inner dimensions do not match")
    out = []
    for i in range(rows):
        out_row = []
        for j in range(cols):
            acc = None
            for k in range(mid):
                term = a[i][k] * b[k][j]
                acc = term if acc is None else acc + term
            out_row.append(acc)
        out.append(out_row)
    return out

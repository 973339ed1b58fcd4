"""Exact rational linear algebra and univariate polynomial analysis.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator.  Nothing in this module ever rounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import DimensionError, DomainError, SingularMatrixError

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: a binary float almost never means the rational the
    caller had in mind.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


_CHUNK = 4000  # stays under the interpreter's int/str conversion limit


def int_to_str(n: int) -> str:
    """Decimal string of an arbitrarily long int."""
    if n < 0:
        return "-" + int_to_str(-n)
    try:
        return str(n)
    except ValueError:
        pass
    k = max(_CHUNK, n.bit_length() * 3 // 20)  # about half the digit count
    hi, lo = divmod(n, 10**k)
    return int_to_str(hi) + int_to_str(lo).rjust(k, "0")


def str_to_int(s: str) -> int:
    """Inverse of :func:`int_to_str`."""
    s = s.strip()
    if len(s) <= _CHUNK:
        return int(s)
    if s[0] in "+-":
        v = str_to_int(s[1:])
        return -v if s[0] == "-" else v
    k = len(s) // 2
    return str_to_int(s[:-k]) * 10**k + str_to_int(s[-k:])


def format_rational(x) -> str:
    """Canonical ``"p/q"`` string (plain ``"p"`` when the denominator is 1)."""
    x = as_rational(x)
    if x.denominator == 1:
        return int_to_str(x.numerator)
    return f"{int_to_str(x.numerator)}/{int_to_str(x.denominator)}"


def parse_rational(s) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (any length) into a Fraction."""
    if isinstance(s, (int, Fraction)) and not isinstance(s, bool):
        return Fraction(s)
    num, _, den = str(s).partition("/")
    return Fraction(str_to_int(num), str_to_int(den) if den else 1)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major tuple of Fraction

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(as_rational(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if n else 0
        if any(len(r) != m for r in rows):
            raise DimensionError("ragged rows")
        return cls(n, m, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionError("inner dimensions differ")
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for j in range(other.cols):
                    out.append(sum((r[k] * other[k, j] for k in range(self.cols)), Fraction(0)))
            return RationalMatrix(self.rows, other.cols, tuple(out))
        return self.apply(other)

    def apply(self, v: Sequence[Number]) -> list:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        return [sum((a * b for a, b in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows)]


def _bareiss(m: list) -> int:
    """Fraction-free elimination on a square integer matrix (modified in place)."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def det(A: RationalMatrix) -> Fraction:
    """Exact determinant: clear row denominators, then Bareiss over the integers."""
    if not A.is_square:
        raise DimensionError(f"determinant of a non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    scale = 1
    m = []
    for i in range(n):
        row = A.row(i)
        den = lcm(*(e.denominator for e in row)) if row else 1
        scale *= den
        m.append([e.numerator * (den // e.denominator) for e in row])
    return Fraction(_bareiss(m), scale)


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix given as nested lists."""
    m = [list(map(int, r)) for r in rows]
    if any(len(r) != len(m) for r in m):
        raise DimensionError("determinant of a non-square matrix")
    return _bareiss(m)


def solve_linear(A: RationalMatrix, b: Sequence[Number]) -> list:
    """Solve ``A x = b`` exactly by Gauss-Jordan elimination."""
    if not A.is_square:
        raise DimensionError("solve_linear needs a square matrix")
    n = A.rows
    if len(b) != n:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {n}")
    aug = [list(A.row(i)) + [as_rational(b[i])] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != c:
            aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        rowc = [e / p for e in aug[c]]
        aug[c] = rowc
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], rowc)]
    return [aug[i][n] for i in range(n)]


def inverse(A: RationalMatrix) -> RationalMatrix:
    n = A.rows
    if not A.is_square:
        raise DimensionError("inverse of a non-square matrix")
    cols = [solve_linear(A, [int(i == j) for i in range(n)]) for j in range(n)]
    return RationalMatrix(n, n, tuple(cols[j][i] for i in range(n) for j in range(n)))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial; ``coefficients[i]`` multiplies ``x**i``."""

    coefficients: tuple

    def __post_init__(self):
        c = [as_rational(x) for x in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def constant(cls, c: Number) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "RationalPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def linear(cls, c0: Number, c1: Number) -> "RationalPolynomial":
        return cls((c0, c1))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return RationalPolynomial(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        ))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RationalPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        return poly_divmod(self, _as_poly(other))

    def __repr__(self):
        if self.is_zero():
            return "RationalPolynomial(0)"
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coefficients) if c]
        return "RationalPolynomial(" + " + ".join(terms) + ")"


def _as_poly(x) -> RationalPolynomial:
    if isinstance(x, RationalPolynomial):
        return x
    return RationalPolynomial((as_rational(x),))


def poly_eval(p: RationalPolynomial, x: Number) -> Fraction:
    """Horner evaluation."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def poly_derivative(p: RationalPolynomial) -> RationalPolynomial:
    return RationalPolynomial(tuple(i * c for i, c in enumerate(p.coefficients) if i))


def poly_divmod(a: RationalPolynomial, b: RationalPolynomial):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coefficients)
    db = b.degree
    lead = b.leading
    if len(rem) - 1 < db:
        return RationalPolynomial(()), a
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] / lead
        quot[k] = c
        if c:
            for j, bc in enumerate(b.coefficients):
                rem[k + j] -= c * bc
    return RationalPolynomial(tuple(quot)), RationalPolynomial(tuple(rem[:db]))


def poly_gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return RationalPolynomial(tuple(c / a.leading for c in a.coefficients))


def squarefree_part(p: RationalPolynomial) -> RationalPolynomial:
    """``p / gcd(p, p')``: same distinct roots, all of them simple."""
    if p.degree <= 0:
        return p
    g = poly_gcd(p, poly_derivative(p))
    q, r = poly_divmod(p, g)
    assert r.is_zero()
    return q


def primitive_integer_coefficients(p: RationalPolynomial) -> list:
    """Integer coefficients of a positive multiple of ``p`` with content 1."""
    if p.is_zero():
        return []
    den = lcm(*(c.denominator for c in p.coefficients))
    ints = [c.numerator * (den // c.denominator) for c in p.coefficients]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def sturm_sequence(p: RationalPolynomial) -> list:
    seq = [p, poly_derivative(p)]
    while not seq[-1].is_zero():
        seq.append(-poly_divmod(seq[-2], seq[-1])[1])
    seq.pop()
    return seq


def sign_variations(seq: Iterable[RationalPolynomial], x: Number) -> int:
    """Sign changes of ``[q(x) for q in seq]``, zeros skipped."""
    x = as_rational(x)
    count = 0
    last = 0
    for q in seq:
        v = poly_eval(q, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def count_roots(p: RationalPolynomial, lo: Number, hi: Number) -> int:
    """Number of distinct real roots of ``p`` in the closed interval [lo, hi]."""
    if p.is_zero():
        raise DomainError("the zero polynomial has infinitely many roots")
    lo, hi = as_rational(lo), as_rational(hi)
    q = squarefree_part(p)
    seq = sturm_sequence(q)
    n = sign_variations(seq, lo) - sign_variations(seq, hi)
    return n + (1 if poly_eval(q, lo) == 0 else 0)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def simplest_rational(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in the closed interval [lo, hi]."""
    if lo > hi:
        raise DomainError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational(-hi, -lo)
    # continued-fraction descent for 0 < lo <= hi
    terms = []
    while True:
        fl = lo.numerator // lo.denominator
        if fl == lo or fl + 1 <= hi:
            terms.append(fl if fl == lo else fl + 1)
            break
        terms.append(fl)
        lo, hi = 1 / (hi - fl), 1 / (lo - fl)
    x = Fraction(terms.pop())
    while terms:
        x = terms.pop() + 1 / x
    return x


@dataclass(frozen=True)
class RootEnclosure:
    """Closed interval holding exactly one real root of the polynomial it came from."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise DomainError("enclosure with lo > hi")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _settle(q: RationalPolynomial, a: Fraction, b: Fraction, den_bound: int):
    """Shrink an isolating interval of a simple root of ``q`` until it is
    either proved rational (returned degenerate) or narrower than the
    separation that any rational root with denominator <= den_bound would
    force, which proves the root irrational.
    """
    sa = _sign(poly_eval(q, a))
    limit = Fraction(1, den_bound * den_bound)
    while True:
        c = simplest_rational(a, b)
        if poly_eval(q, c) == 0:
            return RootEnclosure(c, c)
        if b - a < limit:
            return RootEnclosure(a, b)
        m = (a + b) / 2
        sm = _sign(poly_eval(q, m))
        if sm == 0:
            return RootEnclosure(m, m)
        if sm == sa:
            a = m
        else:
            b = m


def isolate_roots(p: RationalPolynomial, lo: Number, hi: Number) -> list:
    """Disjoint enclosures, one per distinct real root of ``p`` in [lo, hi].

    Rational roots come back as degenerate enclosures ``lo == hi``.  The
    other enclosures have rational endpoints that are not roots, so the
    polynomial's square-free part changes sign across each of them.
    """
    if p.is_zero():
        raise DomainError("cannot isolate the roots of the zero polynomial")
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise DomainError("empty interval")
    q = squarefree_part(p)
    if q.degree <= 0:
        return []
    seq = sturm_sequence(q)
    den_bound = abs(primitive_integer_coefficients(q)[-1])
    found = []
    if poly_eval(q, lo) == 0:
        found.append(RootEnclosure(lo, lo))
    if lo == hi:
        return found

    var = {}

    def V(x):
        if x not in var:
            var[x] = sign_variations(seq, x)
        return var[x]

    # (a, b] half-open pieces with their root counts
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        c = V(a) - V(b)
        if c == 0:
            continue
        if poly_eval(q, b) == 0:
            found.append(RootEnclosure(b, b))
            if c == 1:
                continue
            b2 = (a + b) / 2
            while V(b2) - V(b) != 1 or poly_eval(q, b2) == 0:
                b2 = (b2 + b) / 2
            stack.append((a, b2))
            continue
        if c == 1 and poly_eval(q, a) != 0:
            found.append(_settle(q, a, b, den_bound))
            continue
        m = (a + b) / 2
        stack.append((m, b))
        stack.append((a, m))
    found.sort(key=lambda e: e.lo)
    return found


def refine_root(p: RationalPolynomial, enclosure: RootEnclosure, width: Number) -> RootEnclosure:
    """Bisect an enclosure produced by :func:`isolate_roots` below ``width``."""
    width = as_rational(width)
    if width <= 0:
        raise DomainError("width must be positive")
    if enclosure.is_exact:
        return enclosure
    q = squarefree_part(p)
    a, b = enclosure.lo, enclosure.hi
    sa = _sign(poly_eval(q, a))
    if sa == 0 or sa == _sign(poly_eval(q, b)):
        raise DomainError("enclosure does not bracket a simple root")
    while b - a >= width:
        m = (a + b) / 2
        sm = _sign(poly_eval(q, m))
        if sm == 0:
            return RootEnclosure(m, m)
        if sm == sa:
            a = m
        else:
            b = m
    return RootEnclosure(a, b)


def eval_interval(p: RationalPolynomial, lo: Number, hi: Number) -> tuple:
    """Rigorous rational bounds ``(lower, upper)`` on ``p`` over [lo, hi].

    Interval Horner scheme; the bounds tighten linearly with the interval width.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    a = b = Fraction(0)
    for c in reversed(p.coefficients):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b

"""Exact rational polynomials, the basis P_{n,i}, and integer-preserving
nullspace computation.

P_{n,i}(d) = C(d+i-1, i) * C(d+n, n-i) has degree n and satisfies
P_{n,i}(-k) = (-1)^i [k == i] for k in [0, n], so any polynomial p of
degree <= n is sum_i alpha_i P_{n,i} with alpha_i = (-1)^i p(-i).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial, gcd, lcm


class RatPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        # Coefficients are ints or Fractions; they mix exactly, so no
        # conversion is done here (this is a hot path).
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, RatPoly) else RatPoly([-other]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RatPoly(out)
        return RatPoly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate; x may be a number or a RatPoly (composition)."""
        acc = RatPoly() if isinstance(x, RatPoly) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return "RatPoly(%r)" % (self.coeffs,)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "d^%d" % i if i > 1 else ("d" if i == 1 else "")
            parts.append(("%s*%s" % (c, term)).rstrip("*") if term else str(c))
        return " + ".join(parts)


X = RatPoly([0, 1])


@cache
def binom_poly(shift, k):
    """C(d + shift, k) as a polynomial in d, via the falling factorial."""
    p = RatPoly([1])
    for j in range(k):
        p = p * RatPoly([shift - j, 1])
    return p * Fraction(1, factorial(k))


@cache
def basis_poly(n, i):
    """P_{n,i}(d) = C(d+i-1, i) * C(d+n, n-i)."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n, got i=%d, n=%d" % (i, n))
    return binom_poly(i - 1, i) * binom_poly(n, n - i)


@cache
def basis_poly_scaled(n, i):
    """basis_poly(n, i) as (integer coefficient tuple, common denominator)."""
    p = basis_poly(n, i)
    den = lcm(*(Fraction(c).denominator for c in p.coeffs))
    return tuple(int(c * den) for c in p.coeffs), den


def in_basis(p, n):
    """Coefficients alpha_0..alpha_n of p in the P_{n,i} basis."""
    if p.degree > n:
        raise ValueError("degree %d exceeds n = %d" % (p.degree, n))
    return tuple((-1) ** i * p(-i) for i in range(n + 1))


def from_basis(alpha, n):
    return _from_basis(tuple(alpha), n)


@cache
def _from_basis(alpha, n):
    p = RatPoly()
    for i, a in enumerate(alpha):
        if a:
            p = p + basis_poly(n, i) * a
    return p


def integer_evaluator(p):
    """Fast exact evaluation of an integer-valued polynomial at integers.

    Scales the coefficients to a common integer form once; each call is a
    pure-integer Horner pass.  Raises if a value is not an integer.
    """
    denoms = [1 if isinstance(c, int) else c.denominator for c in p.coeffs]
    scale = lcm(*denoms) if denoms else 1
    cs = [int(c * scale) for c in reversed(p.coeffs)]

    if scale == 1:
        def evaluate(x):
            acc = 0
            for c in cs:
                acc = acc * x + c
            return acc
    else:
        def evaluate(x):
            acc = 0
            for c in cs:
                acc = acc * x + c
            q, r = divmod(acc, scale)
            if r:
                raise ValueError("polynomial value %s/%s is not an integer" % (acc, scale))
            return q

    return evaluate


def degree_drop_equations(n, b, alternative=False):
    """Rows whose joint vanishing says from_basis(alpha, n) has degree <= n-b.

    Row j (j = 0..b-1) is sum_i alpha_i C(n-j, i) = 0; the alternative form
    is sum_{i>=j} alpha_i C(n-j, i-j) = 0 and spans the same row space.
    """
    if not 0 <= b <= n:
        raise ValueError("need 0 <= b <= n")
    rows = []
    for j in range(b):
        if alternative:
            rows.append([comb(n - j, i - j) if i >= j else 0 for i in range(n + 1)])
        else:
            rows.append([comb(n - j, i) for i in range(n + 1)])
    return RatMatrix(rows, n + 1)


@dataclass(frozen=True)
class RatMatrix:
    rows: tuple
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(Fraction(x) for x in r) for r in self.rows))
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")


def _int_rows(m):
    out = []
    for row in m.rows:
        scale = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * scale) for f in row])
    return out


def row_echelon(m):
    """Fraction-free (Bareiss) row echelon of an integer-scaled copy of m.

    Returns (echelon rows, pivot column indices).  Pivot choice is
    deterministic: leftmost column, first nonzero row.
    """
    rows = _int_rows(m)
    piv_cols = []
    r = 0
    prev = 1
    for c in range(m.ncols):
        k = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        for i in range(r + 1, len(rows)):
            rows[i] = [
                (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) // prev
                for j in range(m.ncols)
            ]
        prev = rows[r][c]
        piv_cols.append(c)
        r += 1
    return rows[:r], piv_cols


def nullspace(m):
    """Basis of the right nullspace of m, exact, deterministic order."""
    ech, piv_cols = row_echelon(m)
    free_cols = [c for c in range(m.ncols) if c not in piv_cols]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for r in range(len(piv_cols) - 1, -1, -1):
            c = piv_cols[r]
            s = sum((ech[r][j] * v[j] for j in range(c + 1, m.ncols)), Fraction(0))
            v[c] = -s / ech[r][c]
        basis.append(tuple(v))
    return basis


def primitive_normalize(v, sign_index):
    """Smallest integer multiple of v with gcd 1 and v[sign_index] > 0."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise ValueError("cannot normalize the zero vector")
    scale = lcm(*(x.denominator for x in fr))
    ints = [int(x * scale) for x in fr]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if ints[sign_index] == 0:
        raise ValueError("ambiguous sign: entry %d is zero" % sign_index)
    if ints[sign_index] < 0:
        ints = [-x for x in ints]
    return tuple(ints)

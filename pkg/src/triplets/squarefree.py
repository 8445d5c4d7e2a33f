"""Squarefree-module numerics: h^sq vectors, K-polynomials, decomposition of
Hilbert polynomials in the twisted-structure-sheaf basis, and the triplet of
Betti diagrams with its strand-assembly cross-check.

For a squarefree module with vector h = (h(0), ..., h(n)) the Hilbert series
is sum_k h(k) t^k / (1-t)^k, so the K-polynomial (series times (1-t)^n) is
sum_k h(k) t^k (1-t)^(n-k); the transform h -> K is triangular and is
inverted exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial

from .errors import ConsistencyError, DegenerateSystem
from .linalg import RatPoly, binom_poly
from .solver import BettiDiagram, betti, chi_family, solve_alpha


def _one_minus_t_power(k):
    return RatPoly([(-1) ** i * comb(k, i) for i in range(k + 1)])


def hsq_series(h):
    """K-polynomial of the h^sq vector: the series numerator over (1-t)^n."""
    n = len(h) - 1
    out = RatPoly()
    for k, v in enumerate(h):
        if v:
            out = out + RatPoly([0] * k + [v]) * _one_minus_t_power(n - k)
    return out


def hsq_from_series(num, n):
    """Invert hsq_series: solve sum_s h(s) t^s (1-t)^(n-s) = num."""
    if num.degree > n:
        raise ValueError("numerator degree %d exceeds n = %d" % (num.degree, n))
    h = [Fraction(0)] * (n + 1)
    for s in range(n + 1):
        acc = sum(
            (h[k] * ((-1) ** (s - k)) * comb(n - k, s - k) for k in range(s)),
            Fraction(0),
        )
        h[s] = num.coeff(s) - acc
    return tuple(h)


def sheaf_class_decompose(chi, delta):
    """Coefficients a_0..a_delta with chi(d) = sum_i a_i C(d+i-1, i).

    Negative a_i are returned as-is (flagged by callers), never raised here.
    """
    if chi.degree > delta:
        raise ValueError("degree %d exceeds delta = %d" % (chi.degree, delta))
    a = [Fraction(0)] * (delta + 1)
    work = chi
    for i in range(delta, -1, -1):
        a[i] = work.coeff(i) * factorial(i)
        if a[i]:
            work = work - binom_poly(i - 1, i) * a[i]
    assert not work
    return tuple(a)


def reduction_kpoly(n, i):
    """K_i(t) = sum_k (-1)^k C(n, i+k) C(i+k, k) t^(i+k)."""
    coeffs = [0] * (n + 1)
    for k in range(n - i + 1):
        coeffs[i + k] = (-1) ** k * comb(n, i + k) * comb(i + k, k)
    return RatPoly(coeffs)


@cache
def _reduction_hsq(n, i):
    return hsq_from_series(reduction_kpoly(n, i), n)


def hsq_of_reduction(chi, delta, n):
    """h^sq vector of the squarefree reduction of a sheaf with Hilbert
    polynomial chi on P^delta, embedded for ambient n."""
    a = sheaf_class_decompose(chi, delta)
    if any(x < 0 for x in a):
        raise ConsistencyError("negative class coefficients %r for chi = %s" % (a, chi))
    h = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if ai:
            hi = _reduction_hsq(n, i)
            for s in range(n + 1):
                h[s] += ai * hi[s]
    out = []
    for s, v in enumerate(h):
        if v < 0 or v.denominator != 1:
            raise ConsistencyError("h^sq(%d) = %s for chi = %s" % (s, v, chi))
        out.append(int(v))
    return tuple(out)


def rotated_betti_via_strands(t, alpha=None, fam=None):
    """Betti diagram of the rotated triplet assembled strand by strand:
    homology index q contributes rank h^sq_q(k) at twist n - k."""
    if alpha is None:
        alpha = solve_alpha(t)
    if fam is None:
        fam = chi_family(t, alpha)
    acc = {}
    for chi in fam.chis:
        if not chi:
            continue
        h = hsq_of_reduction(chi, chi.degree, t.n)
        for k, v in enumerate(h):
            if v:
                acc[t.n - k] = acc.get(t.n - k, 0) + v
    entries = tuple((q, d, acc[d]) for q, d in enumerate(sorted(acc)))
    return BettiDiagram(entries)


def triplet_betti(t):
    """Betti diagrams of t, rotate(t), rotate^2(t) (independently solved)."""
    diagrams = []
    cur = t
    for k in range(3):
        try:
            diagrams.append(betti(cur, solve_alpha(cur)))
        except DegenerateSystem as exc:
            exc.rotation = k
            raise
        cur = cur.rotate()
    degs = t.to_degree_triplet()
    for diag, expected in zip(diagrams, degs):
        assert diag.twists() == tuple(expected)
    return tuple(diagrams)


@dataclass(frozen=True)
class HomologicalData:
    B: BettiDiagram
    H: tuple  # one h^sq vector per homology index (zero strands included)
    C: tuple


def homological_data(t, alpha=None):
    if alpha is None:
        alpha = solve_alpha(t)
    fam = chi_family(t, alpha)

    def vectors(polys):
        out = []
        for p in polys:
            if p:
                out.append(hsq_of_reduction(p, p.degree, t.n))
            else:
                out.append((0,) * (t.n + 1))
        return tuple(out)

    return HomologicalData(B=betti(t, alpha), H=vectors(fam.chis), C=vectors(fam.psis))


def betti_kpolynomial(diagram):
    """sum_i (-1)^i beta_i t^(d_i)."""
    out = RatPoly()
    for i, d, r in diagram.entries:
        out = out + RatPoly([0] * d + [(-1) ** i * r])
    return out


def hsq_kpolynomial(hvectors, n):
    """sum_q (-1)^q sum_s h_q(s) t^s (1-t)^(n-s)."""
    out = RatPoly()
    for q, h in enumerate(hvectors):
        out = out + hsq_series(h) * ((-1) ** q)
    return out

"""Supernatural cohomology tables from root sequences and the numeric data
of classical pure complexes (Eagon-Northcott, Buchsbaum-Rim/Eisenbud, Schur,
tensor) realized as pure zip complexes.

A root sequence r_1 > ... > r_delta with positive scale c defines the
polynomial P(t) = (c / delta!) prod (t - r_k).  The sheaf it governs has at
most one nonzero cohomology row per twist: row i on the open interval
between r_{i+1} and r_i, with dimension |P(t)|.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .linalg import RatPoly
from .tables import HyperTable, _as_int


@dataclass(frozen=True)
class RootSequence:
    roots: tuple  # strictly decreasing integers
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(self.roots))
        object.__setattr__(self, "scale", Fraction(self.scale))
        if any(b >= a for a, b in zip(self.roots, self.roots[1:])):
            raise ValueError("roots must be strictly decreasing: %r" % (self.roots,))
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def delta(self):
        return len(self.roots)


def supernatural_poly(rs):
    """(scale / delta!) * prod_k (t - r_k)."""
    p = RatPoly([Fraction(rs.scale, factorial(rs.delta))])
    for r in rs.roots:
        p = p * RatPoly([-r, 1])
    return p


def cohomology_row(rs, twist):
    """Row index holding the (unique) nonzero cohomology at this twist."""
    return sum(1 for r in rs.roots if r > twist)


def supernatural_table(rs, window=None):
    """HyperTable of the supernatural sheaf: entry(i, i + t) = |P(t)|."""
    if window is None:
        window = (-rs.delta - 6, 5)
    lo, hi = window
    p = supernatural_poly(rs)
    cells = {}
    for i in range(rs.delta + 1):
        for col in range(lo, hi + 1):
            t = col - i
            if cohomology_row(rs, t) != i:
                continue
            v = abs(p(t))
            if v:
                cells[(i, col)] = _as_int(v, "supernatural")
    return HyperTable.build(window, cells)


@dataclass(frozen=True)
class PureComplexReport:
    n: int
    degrees: tuple
    ranks: tuple
    is_resolution: bool
    is_cm: bool


def pure_zip(rs, n):
    """Degree sequence and ranks of the pure zip complex on [0, n].

    Degrees are [0, n] minus the negated roots; the rank in degree d is
    C(n, d) * |P(-d)|.  Flags: resolution iff r_1 <= 0; Cohen-Macaulay iff
    additionally -n <= r_delta.
    """
    if n < rs.delta:
        warnings.warn("n = %d is smaller than the root count %d" % (n, rs.delta))
    p = supernatural_poly(rs)
    negated = {-r for r in rs.roots}
    degrees = tuple(d for d in range(n + 1) if d not in negated)
    ranks = tuple(_as_int(comb(n, d) * abs(p(-d)), "rank") for d in degrees)
    is_resolution = rs.delta == 0 or rs.roots[0] <= 0
    is_cm = is_resolution and (rs.delta == 0 or -n <= rs.roots[-1])
    return PureComplexReport(n, degrees, ranks, is_resolution, is_cm)


def eagon_northcott(w):
    """Roots (-1, ..., -(w-1)) of the Eagon-Northcott complex, w >= 2."""
    if w < 2:
        raise ValueError("need w >= 2")
    return RootSequence(tuple(range(-1, -w, -1)))


def buchsbaum_rim(r, m):
    """Roots (-r-1, ..., -r-m) of the Buchsbaum-Rim/Eisenbud complex, r >= 1."""
    if r < 1 or m < 1:
        raise ValueError("need r >= 1 and m >= 1")
    return RootSequence(tuple(range(-r - 1, -r - m - 1, -1)))


def schur_roots(lam):
    """Roots of the Schur bundle for a weakly decreasing lambda with
    lambda_m >= -1: the values -lambda_i - m + i - 1, sorted decreasing."""
    lam = tuple(lam)
    m = len(lam)
    if m == 0:
        raise ValueError("lambda must be nonempty")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("lambda must be weakly decreasing: %r" % (lam,))
    if lam[-1] < -1:
        raise ValueError("need lambda_m >= -1")
    vals = [-lam[i] - m + i for i in range(m)]  # i is 0-based
    return RootSequence(tuple(sorted(vals, reverse=True)))


def tensor_roots(dims, weights):
    """Union of the intervals [-u_i - w_i + 1, -u_i - 1] as a root sequence.

    Requires the pinching condition u_i + w_i - 1 <= u_{i+1}; the dimension
    is sum (w_i - 1).  The scale is taken to be 1.
    """
    dims = tuple(dims)
    weights = tuple(weights)
    if len(dims) != len(weights):
        raise ValueError("dims and weights must have equal length")
    if any(w < 1 for w in dims):
        raise ValueError("dims must be >= 1")
    for (u, w), u_next in zip(zip(weights, dims), weights[1:]):
        if u + w - 1 > u_next:
            raise ValueError("pinching condition violated: %d + %d - 1 > %d" % (u, w, u_next))
    roots = []
    for u, w in zip(weights, dims):
        roots.extend(range(-u - w + 1, -u))  # w - 1 consecutive roots
    return RootSequence(tuple(sorted(roots, reverse=True)))

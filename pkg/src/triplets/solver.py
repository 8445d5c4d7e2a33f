"""Solve for the coefficient vector alpha of a homology triplet and derive
everything it determines: the dual vector, the homology polynomial family
chi_q (and dual family psi_q), and the Betti diagram of the reduction.

The unknowns are alpha_i, i in B.  Rows: for each r in [h, n] \\ H,
sum_{i<=r} alpha_i C(r, i) = 0; for each r in [c, n-b] \\ C,
sum_{i<=r} alpha_{n-i} C(r, i) = 0.  (The C-rows with r > n-b span the same
space as the H-rows there and are dropped.)  After deduplication there are
exactly s_H + s_C + b = |B| - 1 rows.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm

from .degsets import DegreeSet, strands
from .errors import ConsistencyError, Overdetermined, Underdetermined
from .linalg import (
    RatMatrix,
    RatPoly,
    basis_poly_scaled,
    from_basis,
    integer_evaluator,
    nullspace,
    primitive_normalize,
)


@dataclass(frozen=True)
class AlphaVector:
    n: int
    support: tuple
    values: tuple  # length n+1, integers, zero off support

    def __getitem__(self, i):
        return self.values[i]

    def on_support(self):
        return tuple(self.values[i] for i in self.support)

    def hilbert_poly(self):
        return from_basis(self.values, self.n)

    def to_json(self):
        return json.dumps({"n": self.n, "support": list(self.support), "alpha": list(self.on_support())})


def build_equations(t):
    hset = set(t.H)
    cset = set(t.C)
    rows = []
    for r in range(t.h, t.n + 1):
        if r not in hset:
            rows.append([comb(r, i) for i in t.B])
    for r in range(t.c, t.n - t.b + 1):
        if r not in cset:
            rows.append([comb(r, t.n - i) for i in t.B])
    if len(rows) != len(t.B) - 1:
        raise ConsistencyError("expected %d equation rows, built %d" % (len(t.B) - 1, len(rows)))
    return RatMatrix(rows, len(t.B))


def solve_alpha(t):
    """Primitive integer alpha with alpha_{d_0} > 0; unique up to scale."""
    basis = nullspace(build_equations(t))
    if not basis:
        raise Overdetermined(t)
    if len(basis) > 1:
        raise Underdetermined(t, len(basis))
    prim = primitive_normalize(basis[0], 0)
    values = [0] * (t.n + 1)
    for i, v in zip(t.B, prim):
        values[i] = v
    alpha = AlphaVector(t.n, t.B, tuple(values))
    for q, d in enumerate(t.B):
        if (-1) ** q * values[d] <= 0:
            raise ConsistencyError("sign convention violated at q=%d for %r" % (q, t))
    if alpha.hilbert_poly().degree != t.n - t.b:
        raise ConsistencyError("Hilbert polynomial degree != n - b for %r" % (t,))
    return alpha


def dual_alpha(alpha):
    """alpha*_i = (-1)^(|B|-1) alpha_{n-i}, supported on refl(B)."""
    n = alpha.n
    sign = (-1) ** (len(alpha.support) - 1)
    values = tuple(sign * alpha.values[n - i] for i in range(n + 1))
    support = tuple(sorted(n - i for i in alpha.support))
    out = AlphaVector(n, support, values)
    if out.values[support[0]] <= 0:
        raise ConsistencyError("dual alpha violates the sign convention")
    return out


@dataclass(frozen=True)
class ChiFamily:
    chis: tuple  # chi_0..chi_{s_H}
    psis: tuple  # psi_0..psi_{s_C}
    flags: tuple = field(default=())  # strict degree drops, ("chi"|"psi", q)


def _truncated_family(t, alpha):
    """chi_{p-1} = (-1)^(p-1) (RHS_p - RHS_{p-1}) where RHS_p interpolates
    the Hilbert polynomial through the points 0..-(h_p - 2)."""
    starts = strands(DegreeSet(t.h, t.n - t.b, t.H)).starts
    chis = []
    flags = []
    rhs_prev = RatPoly()
    for p in range(1, len(starts)):
        m = starts[p] - 2
        # Accumulate in integers over a common denominator; Fractions only
        # appear once per coefficient at the end.
        den = 1
        acc = [0] * (m + 1) if m >= 0 else []
        for i in t.B:
            if i <= m and alpha.values[i]:
                cs, d = basis_poly_scaled(m, i)
                if d != den:
                    g = lcm(den, d)
                    if g != den:
                        f = g // den
                        acc = [c * f for c in acc]
                        den = g
                    d = g // d
                else:
                    d = 1
                a = alpha.values[i] * d
                for j, c in enumerate(cs):
                    acc[j] += c * a
        rhs = RatPoly([Fraction(c, den) for c in acc])
        chi = rhs - rhs_prev if p % 2 else rhs_prev - rhs
        q = p - 1
        empty = starts[p] == starts[q] + 1
        if empty:
            if chi:
                raise ConsistencyError("chi_%d nonzero on an empty strand of %r" % (q, t))
        else:
            if chi.degree > m:
                raise ConsistencyError("deg chi_%d > %d for %r" % (q, m, t))
            if chi.degree < m:
                flags.append(q)
        chis.append(chi)
        rhs_prev = rhs
    return chis, flags


def chi_family(t, alpha):
    chis, chi_flags = _truncated_family(t, alpha)
    td = t.dual()
    ad = dual_alpha(alpha)
    psis, psi_flags = _truncated_family(td, ad)

    # Euler sums: telescoping gives the Hilbert polynomial on each side.
    p_poly = alpha.hilbert_poly()
    if sum((c * ((-1) ** q) for q, c in enumerate(chis)), RatPoly()) != p_poly:
        raise ConsistencyError("chi family does not sum to the Hilbert polynomial")
    p_dual = ad.hilbert_poly()
    if sum((c * ((-1) ** q) for q, c in enumerate(psis)), RatPoly()) != p_dual:
        raise ConsistencyError("psi family does not sum to the dual Hilbert polynomial")
    # P*(d) = (-1)^(|B|-1-n) P(-n-d); both sides have degree <= n, so
    # agreement at n+1 points is agreement as polynomials.
    sign = -1 if (len(t.B) - 1 - t.n) % 2 else 1
    ev_p, ev_dual = integer_evaluator(p_poly), integer_evaluator(p_dual)
    if any(ev_dual(x) != sign * ev_p(-t.n - x) for x in range(t.n + 1)):
        raise ConsistencyError("dual Hilbert polynomial identity failed for %r" % (t,))

    flags = tuple([("chi", q) for q in chi_flags] + [("psi", q) for q in psi_flags])
    return ChiFamily(tuple(chis), tuple(psis), flags)


@dataclass(frozen=True)
class BettiDiagram:
    entries: tuple  # (homological index, twist, rank)

    def twists(self):
        return tuple(e[1] for e in self.entries)

    def ranks(self):
        return tuple(e[2] for e in self.entries)

    def twist_multiset(self):
        return tuple(sorted((e[1], e[2]) for e in self.entries))

    def to_json(self):
        return json.dumps({"twists": list(self.twists()), "ranks": list(self.ranks())})

    def render(self):
        """Macaulay2-style grid: columns = homological index, rows = twist - index."""
        if not self.entries:
            return "(empty diagram)"
        slopes = [d - i for i, d, _ in self.entries]
        cols = [i for i, _, _ in self.entries]
        cells = {(d - i, i): r for i, d, r in self.entries}
        lines = []
        width = max(len(str(r)) for _, _, r in self.entries)
        width = max(width, max(len(str(s)) for s in slopes), max(len(str(c)) for c in cols))
        header = " " * (width + 2) + " ".join(str(c).rjust(width) for c in range(min(cols), max(cols) + 1))
        lines.append(header)
        for s in range(min(slopes), max(slopes) + 1):
            row = [str(cells.get((s, c), ".")).rjust(width) for c in range(min(cols), max(cols) + 1)]
            lines.append(str(s).rjust(width) + ": " + " ".join(row))
        return "\n".join(lines)


def betti(t, alpha=None):
    """Betti diagram of the pure squarefree reduction: beta_q = C(n, d_q) (-1)^q alpha_{d_q}."""
    if alpha is None:
        alpha = solve_alpha(t)
    entries = []
    for q, d in enumerate(t.B):
        rank = comb(t.n, d) * (-1) ** q * alpha.values[d]
        if rank <= 0:
            raise ConsistencyError("nonpositive Betti number at q=%d for %r" % (q, t))
        entries.append((q, d, rank))
    return BettiDiagram(tuple(entries))

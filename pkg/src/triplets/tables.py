"""Hypercohomology tables and the term data of zip complexes and Tate
resolutions.

Convention: entry(j, p) = dim H^j(E(p - j)), so the column index p is the
diagonal label printed under the source tables and the twist is t = p - j.
A full table has three regions:
  * corner, twists -n..0:   entry(d_q - q, -q) = (-1)^q alpha_{d_q};
  * positive twists t >= 1: entry(-q, -q + t) = chi_q(t);
  * twists t <= -n-1:       entry(n+1-|B|+q, row + t) = psi_q(-n - t).
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConsistencyError
from .linalg import integer_evaluator
from .solver import chi_family, solve_alpha

DOT = "."


@dataclass(frozen=True)
class HyperTable:
    window: tuple  # (p_lo, p_hi) inclusive column range
    entries: tuple  # ((row j, col p, dim), ...) sorted

    @classmethod
    def build(cls, window, cells):
        items = tuple(sorted((j, p, v) for (j, p), v in cells.items() if v))
        return cls(tuple(window), items)

    def cell(self, j, p):
        return self.as_dict().get((j, p), 0)

    def as_dict(self):
        try:
            return object.__getattribute__(self, "_map")
        except AttributeError:
            m = {(j, p): v for j, p, v in self.entries}
            object.__setattr__(self, "_map", m)
            return m

    def dim(self, j, twist):
        """Cohomology function (j, twist) -> dim; 0 outside the window."""
        return self.cell(j, j + twist)

    def rows(self):
        return sorted({j for j, _, _ in self.entries}, reverse=True)

    def euler(self, t, rows=None):
        """sum_j (-1)^j entry(j, j + t) over the given rows."""
        if rows is None:
            rows = [j for j, _, _ in self.entries]
        return sum((-1 if j % 2 else 1) * self.dim(j, t) for j in sorted(set(rows)))

    def to_json(self):
        return json.dumps(
            {
                "window": list(self.window),
                "entries": [{"row": j, "col": p, "dim": v} for j, p, v in self.entries],
            }
        )

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        cells = {(e["row"], e["col"]): e["dim"] for e in d["entries"]}
        return cls.build(tuple(d["window"]), cells)

    def render(self):
        return render(self)


def _as_int(x, what):
    if isinstance(x, int):
        return x
    x = Fraction(x)
    if x.denominator != 1:
        raise ConsistencyError("%s is not an integer: %s" % (what, x))
    return int(x)


def default_window(n):
    return (-n - 6, 5)


def full_table(t, alpha=None, window=None, fam=None):
    """Assemble the hypercohomology table of the triplet's complex."""
    if alpha is None:
        alpha = solve_alpha(t)
    if window is None:
        window = default_window(t.n)
    lo, hi = window
    if lo > -len(t.B) + 1 or hi < 0:
        raise ValueError("window must contain [%d, 0]" % (-len(t.B) + 1))
    if fam is None:
        fam = chi_family(t, alpha)
    cells = {}

    def put(j, p, v, what):
        v = _as_int(v, what)
        if v < 0:
            raise ConsistencyError("negative %s entry at (%d, %d)" % (what, j, p))
        if v:
            key = (j, p)
            assert key not in cells, "region collision at %r" % (key,)
            cells[key] = v

    for q, d in enumerate(t.B):
        if lo <= -q <= hi:
            put(d - q, -q, (-1) ** q * alpha.values[d], "corner")
    for q, chi in enumerate(fam.chis):
        if not chi:
            continue
        ev = integer_evaluator(chi)
        for p in range(max(lo, -q + 1), hi + 1):
            put(-q, p, ev(p + q), "homology")
    base = t.n + 1 - len(t.B)
    for q, psi in enumerate(fam.psis):
        if not psi:
            continue
        row = base + q
        ev = integer_evaluator(psi)
        for p in range(lo, min(hi, row - t.n - 1) + 1):
            put(row, p, ev(-t.n - (p - row)), "dual")

    table = HyperTable.build(window, cells)
    _assert_euler(table, t, alpha)
    return table


def _assert_euler(table, t, alpha):
    p_ev = integer_evaluator(alpha.hilbert_poly())
    lo, hi = table.window
    rows = list(range(-t.s_H, t.n + 2 - len(t.B) + t.s_C + 1)) + [d - q for q, d in enumerate(t.B)]
    rows = sorted(set(rows))
    # Only twists whose whole diagonal lies inside the window can be checked.
    for twist in range(lo - min(rows), hi - max(rows) + 1):
        if table.euler(twist, rows) != p_ev(twist):
            raise ConsistencyError("Euler consistency fails at twist %d for %r" % (twist, t))


def corner_table(t, alpha=None):
    """The pure corner: column -q carries (-1)^q alpha_{d_q} at row d_q - q."""
    if alpha is None:
        alpha = solve_alpha(t)
    cells = {}
    for q, d in enumerate(t.B):
        cells[(d - q, -q)] = _as_int((-1) ** q * alpha.values[d], "corner")
    return HyperTable.build((-len(t.B) + 1, 0), cells)


@dataclass(frozen=True)
class ZipTerm:
    p: int
    terms: tuple  # (exterior power a, twist -a, multiplicity)

    def ranks(self, n):
        """Total rank contributions C(n, a) * multiplicity per twist."""
        return tuple((twist, comb(n, a) * m) for a, twist, m in self.terms)


def _cohomology_fn(h):
    if isinstance(h, HyperTable):
        return h.dim
    return h


def zip_terms(h, n, p):
    """Terms of the zip complex in homological position p.

    The term for cohomological row j is wedge^{p+j} V tensor S(-p-j) with
    multiplicity h(j, -p-j); only 0 <= p+j <= n contributes.
    """
    fn = _cohomology_fn(h)
    terms = []
    for a in range(n + 1):
        j = a - p
        m = fn(j, -a)
        if m:
            terms.append((a, -a, m))
    return ZipTerm(p, tuple(terms))


def tate_terms(h, p, rows=None):
    """Multiset of (generator twist j - p, multiplicity h(j, p - j)) at column p."""
    fn = _cohomology_fn(h)
    if rows is None:
        if not isinstance(h, HyperTable):
            raise ValueError("rows must be given for a plain cohomology function")
        rows = h.rows()
    out = []
    for j in sorted(set(rows), reverse=True):
        m = fn(j, p - j)
        if m:
            out.append((j - p, m))
    return tuple(out)


def render(table):
    """Plain-text grid in the style of the source tables; '.' marks zero."""
    lo, hi = table.window
    cols = list(range(lo, hi + 1))
    cells = table.as_dict()
    rows = table.rows()
    if rows:
        rows = list(range(max(rows), min(rows) - 1, -1))
    grid = [[str(cells.get((j, p), DOT)) for p in cols] for j in rows]
    labels = [str(p) for p in cols]
    widths = [max(len(labels[k]), *(len(g[k]) for g in grid)) if grid else len(labels[k]) for k in range(len(cols))]
    lines = []
    for j, g in zip(rows, grid):
        lines.append(" ".join(s.rjust(w) for s, w in zip(g, widths)) + "  | " + str(j))
    body_width = sum(widths) + len(widths) - 1
    lines.append("-" * (body_width + 2))
    lines.append(" ".join(s.rjust(w) for s, w in zip(labels, widths)) + "  | d\\i")
    return "\n".join(lines)

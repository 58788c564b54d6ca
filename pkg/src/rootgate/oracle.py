"""Brute-force verifiers for the fast paths.

Nothing here reuses the support-subset shortcut: parabolic membership is
decided by exact rational linear algebra on ambient vectors, and coarse
classes are formed by testing ambient proportionality directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import RankTooLarge
from .rootsys import RootSystem, build, supported_types


class _Span:
    """Row-reduced basis of a set of rational vectors."""

    def __init__(self, vectors):
        self.rows = []  # (pivot column, row normalised to 1 at pivot)
        for v in vectors:
            w = self.reduce(v)
            piv = next((i for i, x in enumerate(w) if x != 0), None)
            if piv is None:
                continue
            p = w[piv]
            self.rows.append((piv, [x / p for x in w]))

    def reduce(self, v):
        w = [Fraction(x) for x in v]
        for piv, row in self.rows:
            c = w[piv]
            if c:
                w = [a - c * b for a, b in zip(w, row)]
        return w

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))


def _solve(basis, v):
    """Coefficients of v over linearly independent ``basis`` (Gauss-Jordan)."""
    k, dim = len(basis), len(v)
    # columns of the system are basis vectors; augment with v
    m = [[Fraction(basis[j][d]) for j in range(k)] + [Fraction(v[d])] for d in range(dim)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((i for i in range(row, dim) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        m[row] = [x / p for x in m[row]]
        for i in range(dim):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    if any(m[i][k] != 0 for i in range(row, dim)):
        raise ValueError("vector not in span")
    coeffs = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        coeffs[col] = m[i][k]
    return coeffs


def _proportional_positive(u, v) -> bool:
    ratio = None
    for a, b in zip(u, v):
        if (a == 0) != (b == 0):
            return False
        if a != 0:
            q = Fraction(b) / Fraction(a)
            if ratio is None:
                ratio = q
            elif q != ratio:
                return False
    return ratio is not None and ratio > 0


def _ambient_classes(rs: RootSystem) -> list:
    vectors = sorted({r.ambient for r in rs.all_roots})
    classes = []
    for v in vectors:
        for cls in classes:
            if _proportional_positive(cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def _positivity(rs: RootSystem) -> dict:
    simple = [s.ambient for s in rs.simple_roots]
    return {r.ambient: sum(_solve(simple, r.ambient)) > 0 for r in rs.all_roots}


def oracle_resonant_codim(rs: RootSystem, kept) -> int:
    """Resonant codimension recomputed from the definition.

    ``kept`` holds the 1-based indices of simple roots whose negatives are in
    the parabolic.
    """
    return _codim(rs, kept, _positivity(rs), _ambient_classes(rs))


def _codim(rs, kept, positive, classes) -> int:
    span = _Span([rs.simple_roots[i - 1].ambient for i in sorted(kept)])
    in_q = {v: positive[v] or v in span for v in positive}
    return sum(1 for cls in classes if not any(in_q[v] for v in cls))


def oracle_min_over_all_proper(rs: RootSystem, force: bool = False):
    """Exact minimum over every proper kept-set, with all attaining sets."""
    n = rs.rank
    if n > 8 and not force:
        raise RankTooLarge(f"{rs.label}: exhaustive scan over 2^{n} subsets refused above rank 8")
    positive = _positivity(rs)
    classes = _ambient_classes(rs)
    best, witnesses = None, []
    for k in range(n):
        for kept in combinations(range(1, n + 1), k):
            val = _codim(rs, kept, positive, classes)
            if best is None or val < best:
                best, witnesses = val, [frozenset(kept)]
            elif val == best:
                witnesses.append(frozenset(kept))
    return best, witnesses


@dataclass
class OracleReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_resonant_codimension(max_rank: int = 6, types=None) -> OracleReport:
    """Compare fast and oracle resonant codimension on every kept-set."""
    from .parabolic import Parabolic, resonant_codimension

    report = OracleReport()
    for t in types if types is not None else supported_types(max_rank):
        rs = build(t)
        positive = _positivity(rs)
        classes = _ambient_classes(rs)
        n = rs.rank
        for k in range(n + 1):
            for kept in combinations(range(1, n + 1), k):
                fast = resonant_codimension(Parabolic(rs, frozenset(kept)))
                slow = _codim(rs, kept, positive, classes)
                report.checked += 1
                if fast != slow:
                    report.mismatches.append(((rs.label, kept), fast, slow))
    return report


def check_root_systems(max_rank: int = 12, types=None) -> OracleReport:
    """Compare ``build`` against reflection closure and the count formulas."""
    from .rootsys import POSITIVE_ROOT_COUNT, oracle_root_coords

    report = OracleReport()
    for t in types if types is not None else supported_types(max_rank):
        rs = build(t)
        fast = frozenset(r.simple_coords for r in rs.all_roots)
        slow = oracle_root_coords(t)
        report.checked += 1
        if fast != slow:
            report.mismatches.append((rs.label, len(fast), len(slow)))
        expected = POSITIVE_ROOT_COUNT[t.family](t.rank)
        report.checked += 1
        if len(rs.positive_roots) != expected:
            report.mismatches.append((rs.label, len(rs.positive_roots), expected))
    return report

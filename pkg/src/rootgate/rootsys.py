"""Restricted root systems with exact arithmetic.

Roots are stored canonically by their integer coordinates in the basis of
simple roots; the ambient (Euclidean) presentation is kept alongside as exact
rationals, with denominators 1 or 2.  Simple roots follow Bourbaki labelling.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import InvalidRank, InvariantViolation, NonConvergence, RootNotInSystem

CLASSICAL = ("A", "B", "C", "BC", "D")
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")
FAMILIES = CLASSICAL + EXCEPTIONAL

MIN_RANK = {"A": 1, "B": 2, "C": 2, "BC": 1, "D": 4}
FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}

# closed forms for |positive roots|
POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "BC": lambda n: n * n + n,
    "D": lambda n: n * (n - 1),
    "E6": lambda n: 36,
    "E7": lambda n: 63,
    "E8": lambda n: 120,
    "F4": lambda n: 24,
    "G2": lambda n: 6,
}

_TYPE_RE = re.compile(r"^\s*(BC|A|B|C|D|E|F|G)_?(\d+)\s*$", re.IGNORECASE)

Vector = tuple  # tuple[Fraction, ...]


@dataclass(frozen=True, order=True)
class RootSystemType:
    """Family and rank of an irreducible (possibly non-reduced) root system.

    >>> RootSystemType("A", 3).label
    'A3'
    >>> RootSystemType("G2").rank
    2
    """

    family: str
    rank: Optional[int] = None

    def __post_init__(self):
        family = self.family.upper()
        if family not in FAMILIES:
            raise InvalidRank(f"unknown root system family {self.family!r}")
        object.__setattr__(self, "family", family)
        if family in FIXED_RANK:
            if self.rank is None:
                object.__setattr__(self, "rank", FIXED_RANK[family])
            elif self.rank != FIXED_RANK[family]:
                raise InvalidRank(f"{family} has rank {FIXED_RANK[family]}, got {self.rank}")
            return
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidRank(f"{family}_n needs an integer rank, got {self.rank!r}")
        lo = MIN_RANK[family]
        if self.rank < lo:
            raise InvalidRank(f"{family}_n requires n >= {lo}, got {family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemType":
        """Parse labels such as ``A3``, ``BC2``, ``D_4`` or ``E8``."""
        m = _TYPE_RE.match(text)
        if not m:
            raise InvalidRank(f"not a root system type: {text!r}")
        letter, digits = m.group(1).upper(), int(m.group(2))
        if letter in ("E", "F", "G"):
            name = f"{letter}{digits}"
            if name not in FIXED_RANK:
                raise InvalidRank(f"no exceptional root system {name}")
            return cls(name)
        return cls(letter, digits)

    @property
    def label(self) -> str:
        if self.family in FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"

    @property
    def reduced(self) -> bool:
        return self.family != "BC"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Root:
    simple_coords: tuple
    ambient: tuple

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> "Root":
        return Root(
            tuple(-c for c in self.simple_coords), tuple(-a for a in self.ambient)
        )

    def support(self) -> frozenset:
        return support(self)


def root_order(root: Root) -> tuple:
    """Sort key: height, then coordinates so that a1 precedes a2 (a1, a2, a1+a2)."""
    return (root.height, tuple(-abs(c) for c in root.simple_coords))


def support(root: Root) -> frozenset:
    """1-based indices of the simple roots occurring in ``root``."""
    return frozenset(i + 1 for i, c in enumerate(root.simple_coords) if c != 0)


def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


@dataclass(frozen=True, eq=False)
class RootSystem:
    rs_type: RootSystemType
    simple_roots: tuple
    all_roots: frozenset
    cartan_matrix: tuple
    _index: dict = field(repr=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return self.rs_type.rank

    @property
    def label(self) -> str:
        return self.rs_type.label

    @cached_property
    def positive_roots(self) -> tuple:
        return tuple(
            sorted(
                (r for r in self.all_roots if r.is_positive),
                key=root_order,
            )
        )

    @cached_property
    def negative_roots(self) -> tuple:
        return tuple(-r for r in self.positive_roots)

    def root(self, coords: Iterable[int]) -> Root:
        """Look up a root by its simple-root coordinates."""
        key = tuple(coords)
        try:
            return self._index[key]
        except KeyError:
            raise RootNotInSystem(f"{key} is not a root of {self.label}") from None

    def __contains__(self, root) -> bool:
        return isinstance(root, Root) and self._index.get(root.simple_coords) == root

    def __repr__(self):
        return f"RootSystem({self.label})"


@dataclass(frozen=True)
class DirectSum:
    """Orthogonal direct sum of irreducible root systems.

    Roots are embedded block-wise: simple coordinates and ambient vectors of
    factor ``k`` occupy their own coordinate block, zeros elsewhere.
    """

    factors: tuple

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def embed(self, k: int, root: Root) -> Root:
        coords, amb = [], []
        for j, f in enumerate(self.factors):
            dim = len(f.simple_roots[0].ambient)
            if j == k:
                coords.extend(root.simple_coords)
                amb.extend(root.ambient)
            else:
                coords.extend([0] * f.rank)
                amb.extend([Fraction(0)] * dim)
        return Root(tuple(coords), tuple(amb))

    @cached_property
    def all_roots(self) -> frozenset:
        return frozenset(
            self.embed(k, r) for k, f in enumerate(self.factors) for r in f.all_roots
        )

    def factor_of(self, root: Root) -> int:
        offset = 0
        for k, f in enumerate(self.factors):
            block = root.simple_coords[offset : offset + f.rank]
            if any(block):
                return k
            offset += f.rank
        raise RootNotInSystem("zero vector is not a root")


def direct_sum(*types) -> DirectSum:
    return DirectSum(tuple(build(t) for t in types))


# --- ambient presentations -------------------------------------------------


def _e(dim: int, *terms) -> Vector:
    """Vector in Q^dim from (index, coefficient) pairs, indices 1-based."""
    v = [Fraction(0)] * dim
    for i, c in terms:
        v[i - 1] += Fraction(c)
    return tuple(v)


def _pm_pairs(n: int) -> list:
    """All +-e_i +- e_j, i < j."""
    out = []
    for i, j in combinations(range(1, n + 1), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(_e(n, (i, si), (j, sj)))
    return out


def _classical(family: str, n: int):
    if family == "A":
        dim = n + 1
        simple = [_e(dim, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
        roots = [_e(dim, (i, 1), (j, -1)) for i in range(1, dim + 1) for j in range(1, dim + 1) if i != j]
        return simple, roots
    simple = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
    roots = _pm_pairs(n)
    short = [_e(n, (i, s)) for i in range(1, n + 1) for s in (1, -1)]
    long_ = [_e(n, (i, 2 * s)) for i in range(1, n + 1) for s in (1, -1)]
    if family == "B":
        simple.append(_e(n, (n, 1)))
        roots += short
    elif family == "C":
        simple.append(_e(n, (n, 2)))
        roots += long_
    elif family == "BC":
        simple.append(_e(n, (n, 1)))
        roots += short + long_
    elif family == "D":
        simple.append(_e(n, (n - 1, 1), (n, 1)))
    return simple, roots


def _e8_roots() -> list:
    roots = _pm_pairs(8)
    half = Fraction(1, 2)
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(half * s for s in signs))
    return roots


def _e8_simple() -> list:
    h = Fraction(1, 2)
    a1 = tuple([h] + [-h] * 6 + [h])
    simple = [a1, _e(8, (1, 1), (2, 1))]
    simple += [_e(8, (i - 1, -1), (i, 1)) for i in range(2, 8)]
    return simple


def _exceptional(family: str):
    if family == "G2":
        simple = [_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, 1), (3, 1))]
        roots = [_e(3, (i, 1), (j, -1)) for i in range(1, 4) for j in range(1, 4) if i != j]
        for i in range(1, 4):
            others = [k for k in range(1, 4) if k != i]
            for s in (1, -1):
                roots.append(_e(3, (i, 2 * s), (others[0], -s), (others[1], -s)))
        return simple, roots
    if family == "F4":
        h = Fraction(1, 2)
        simple = [_e(4, (2, 1), (3, -1)), _e(4, (3, 1), (4, -1)), _e(4, (4, 1)), (h, -h, -h, -h)]
        roots = _pm_pairs(4) + [_e(4, (i, s)) for i in range(1, 5) for s in (1, -1)]
        roots += [tuple(h * s for s in signs) for signs in product((1, -1), repeat=4)]
        return simple, roots
    simple = _e8_simple()
    roots = _e8_roots()
    if family == "E8":
        return simple, roots
    # E7, E6: E8 roots lying in the span of the first 7 (resp. 6) simple roots
    k = FIXED_RANK[family]
    coords = _Solver(simple)
    kept = [r for r in roots if not any(coords(r)[k:])]
    return simple[:k], kept


class _Solver:
    """Exact coordinates of vectors in a linearly independent basis."""

    def __init__(self, basis):
        self.basis = [tuple(Fraction(x) for x in b) for b in basis]
        k = len(self.basis)
        dim = len(self.basis[0])
        # pick k independent columns and invert that k x k block
        rows = [list(b) for b in self.basis]
        cols = []
        mat = [r[:] for r in rows]
        used = []
        for c in range(dim):
            piv = next((i for i in range(k) if i not in used and mat[i][c] != 0), None)
            if piv is None:
                continue
            used.append(piv)
            cols.append(c)
            for i in range(k):
                if i != piv and mat[i][c] != 0:
                    f = mat[i][c] / mat[piv][c]
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[piv])]
            if len(cols) == k:
                break
        if len(cols) != k:
            raise InvariantViolation("simple roots are linearly dependent")
        self.cols = cols
        block = [[rows[i][c] for c in cols] for i in range(k)]  # B with x = c @ B
        self.inv = _invert(block)
        self._int_inv = None

    def __call__(self, v) -> tuple:
        if self._int_inv is None:
            den = 1
            for row in self.inv:
                for x in row:
                    den = den * x.denominator // gcd(den, x.denominator)
            self._den = den
            self._int_inv = [[int(x * den) for x in row] for row in self.inv]
            self._basis2 = [_doubled(b) for b in self.basis]
        k = len(self.basis)
        v2 = _doubled(v)
        vc = [v2[c] for c in self.cols]
        # coeffs = vc @ inv / 2, carried as integers over 2 * den
        nums = [sum(vc[j] * self._int_inv[j][i] for j in range(k)) for i in range(k)]
        scale = 2 * self._den
        if all(x % scale == 0 for x in nums):
            coeffs = tuple(x // scale for x in nums)
            back = tuple(sum(coeffs[i] * self._basis2[i][d] for i in range(k)) for d in range(len(v2)))
            ok = back == v2
        else:
            coeffs = tuple(Fraction(x, scale) for x in nums)
            back = tuple(
                sum((coeffs[i] * self.basis[i][d] for i in range(k)), Fraction(0))
                for d in range(len(v))
            )
            ok = back == tuple(Fraction(x) for x in v)
        if not ok:
            raise InvariantViolation(f"{v} is not in the span of the simple roots")
        return coeffs


def _doubled(v) -> tuple:
    """Integer vector 2*v; ambient entries have denominators dividing 2."""
    out = []
    for x in v:
        d = x.denominator
        if d > 2:
            raise InvariantViolation(f"ambient entry with denominator > 2 in {v}")
        out.append(x.numerator * (2 // d))
    return tuple(out)


def _invert(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _cartan(simple) -> tuple:
    s2 = [_doubled(v) for v in simple]
    ip = [[sum(a * b for a, b in zip(x, y)) for y in s2] for x in s2]
    n = len(simple)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            q, rem = divmod(2 * ip[i][j], ip[j][j])
            if rem:
                raise InvariantViolation("non-integral Cartan entry")
            row.append(q)
        out.append(tuple(row))
    return tuple(out)


@lru_cache(maxsize=None)
def _build(rs_type: RootSystemType) -> RootSystem:
    if rs_type.family in CLASSICAL:
        simple, ambient = _classical(rs_type.family, rs_type.rank)
    else:
        simple, ambient = _exceptional(rs_type.family)
    solve = _Solver(simple)
    index = {}
    for v in ambient:
        coeffs = solve(v)
        if any(c.denominator != 1 for c in coeffs):
            raise InvariantViolation(f"non-integral root {v} in {rs_type}")
        r = Root(tuple(int(c) for c in coeffs), v)
        index[r.simple_coords] = r
    simple_roots = tuple(index[tuple(int(i == j) for j in range(len(simple)))] for i in range(len(simple)))
    rs = RootSystem(rs_type, simple_roots, frozenset(index.values()), _cartan(simple), index)
    validate(rs)
    return rs


def build(rs_type) -> RootSystem:
    """Construct the root system of the given type.

    Accepts a :class:`RootSystemType` or a label such as ``"BC2"``.  Results
    are cached, so repeated calls return the same object.
    """
    if isinstance(rs_type, str):
        rs_type = RootSystemType.parse(rs_type)
    return _build(rs_type)


def validate(rs: RootSystem) -> None:
    """Raise :class:`InvariantViolation` if ``rs`` is malformed."""
    roots = rs.all_roots
    n = rs.rank
    simple2 = [_doubled(s.ambient) for s in rs.simple_roots]
    doubled = {r.simple_coords: _doubled(r.ambient) for r in roots}
    dim = len(simple2[0])
    for coords, amb2 in doubled.items():
        if not any(coords):
            raise InvariantViolation("zero vector among roots")
        if not (all(c >= 0 for c in coords) or all(c <= 0 for c in coords)):
            raise InvariantViolation(f"mixed-sign root {coords}")
        neg = doubled.get(tuple(-c for c in coords))
        if neg is None or any(a + b for a, b in zip(neg, amb2)):
            raise InvariantViolation(f"negation of {coords} missing")
        recon = tuple(sum(c * s[d] for c, s in zip(coords, simple2) if c) for d in range(dim))
        if recon != amb2:
            raise InvariantViolation("ambient vector disagrees with simple coordinates")
    for i in range(n):
        for j in range(n):
            a = rs.cartan_matrix[i][j]
            if (i == j and a != 2) or (i != j and a > 0):
                raise InvariantViolation("bad Cartan matrix")
    # every positive root is reached from the simple roots by adding simple roots
    coords = {r.simple_coords for r in roots}
    frontier = {s.simple_coords for s in rs.simple_roots}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for c in frontier:
            for i in range(n):
                d = tuple(x + (k == i) for k, x in enumerate(c))
                if d in coords and d not in seen:
                    nxt.add(d)
        seen |= nxt
        frontier = nxt
    if len(seen) * 2 != len(roots):
        raise InvariantViolation("positive roots not reachable from simple roots")
    expected = POSITIVE_ROOT_COUNT[rs.rs_type.family](n)
    if len(roots) != 2 * expected:
        raise InvariantViolation(f"{rs.label}: {len(roots) // 2} positive roots, expected {expected}")


def enumerate_positive_roots(rs: RootSystem) -> list:
    """Positive roots ordered by height; ties broken so that a1 precedes a2."""
    return list(rs.positive_roots)


def cartan_matrix(rs: RootSystem) -> tuple:
    """``A[i][j] = 2(a_i, a_j) / (a_j, a_j)`` over the simple roots."""
    return rs.cartan_matrix


def closure_oracle(cartan, max_roots: int = 100_000) -> frozenset:
    """Roots generated by closing the simple roots under simple reflections.

    Works purely from the Cartan matrix, so it is independent of the ambient
    presentation used by :func:`build`.  Returns simple-root coordinate
    tuples (there is no ambient data to attach).  Only reduced systems come
    out of a reflection closure.
    """
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise ValueError("Cartan matrix must be square and non-empty")
    start = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                if pairing == 0:
                    continue
                img = tuple(b - pairing * (k == i) for k, b in enumerate(beta))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
            if len(seen) > max_roots:
                raise NonConvergence(f"reflection closure exceeded {max_roots} roots")
        frontier = nxt
    return frozenset(seen)


def oracle_root_coords(rs_type) -> frozenset:
    """Reflection-closure roots for any supported type, in ``build``'s basis.

    For BC_n the system is the union of B_n and C_n; the C_n roots are
    rewritten in the B_n basis (the last C simple root is twice the last B
    simple root).
    """
    if isinstance(rs_type, str):
        rs_type = RootSystemType.parse(rs_type)
    if rs_type.reduced:
        return closure_oracle(build(rs_type).cartan_matrix)
    n = rs_type.rank
    if n == 1:
        b_roots = closure_oracle(((2,),))
        c_roots = frozenset((2 * c[0],) for c in b_roots)
        return b_roots | c_roots
    b_roots = closure_oracle(build(RootSystemType("B", n)).cartan_matrix)
    c_raw = closure_oracle(build(RootSystemType("C", n)).cartan_matrix)
    c_roots = frozenset(c[:-1] + (2 * c[-1],) for c in c_raw)
    return b_roots | c_roots


def supported_types(max_rank: int, families: Iterable[str] = FAMILIES) -> list:
    """Every valid type with rank <= max_rank, in family then rank order."""
    out = []
    for fam in families:
        if fam in FIXED_RANK:
            if FIXED_RANK[fam] <= max_rank:
                out.append(RootSystemType(fam))
        else:
            out.extend(RootSystemType(fam, n) for n in range(MIN_RANK[fam], max_rank + 1))
    return out

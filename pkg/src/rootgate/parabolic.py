"""Standard parabolic subalgebras and their resonant codimension.

A standard parabolic is fixed by the set of simple roots whose negatives are
kept.  Its root spaces are all positive roots together with the negative
roots supported on the kept set; the Levi and split-torus parts are always
present and carry no combinatorial data here.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .coarse import coarse_classes, negative_coarse_classes
from .errors import RankTooSmall, RootNotInSystem
from .rootsys import Root, RootSystem, support


@dataclass(frozen=True)
class Parabolic:
    rs: RootSystem
    kept: frozenset

    def __post_init__(self):
        kept = frozenset(self.kept)
        bad = [i for i in kept if not (isinstance(i, int) and 1 <= i <= self.rs.rank)]
        if bad:
            raise ValueError(f"simple root indices {sorted(bad)} out of range 1..{self.rs.rank}")
        object.__setattr__(self, "kept", kept)

    @property
    def excluded(self) -> frozenset:
        """Simple roots whose negatives are omitted."""
        return frozenset(range(1, self.rs.rank + 1)) - self.kept

    @property
    def corank(self) -> int:
        return len(self.excluded)

    @property
    def is_proper(self) -> bool:
        return bool(self.excluded)

    def roots(self) -> frozenset:
        return frozenset(r for r in self.rs.all_roots if _in_q(self, r))

    def __repr__(self):
        return f"Parabolic({self.rs.label}, excluded={sorted(self.excluded)})"


def parabolic(rs: RootSystem, excluded: Iterable[int] = ()) -> Parabolic:
    """Parabolic obtained by omitting the given (1-based) simple roots."""
    excluded = frozenset(excluded)
    return Parabolic(rs, frozenset(range(1, rs.rank + 1)) - excluded)


def _in_q(q: Parabolic, root: Root) -> bool:
    return root.is_positive or support(root) <= q.kept


def contains_root_space(q: Parabolic, root: Root) -> bool:
    if root not in q.rs:
        raise RootNotInSystem(f"{root.simple_coords} is not a root of {q.rs.label}")
    return _in_q(q, root)


def verify_closure(q: Parabolic, roots: Optional[Iterable[Root]] = None) -> bool:
    """Bracket-closure check by exhaustive pair scan.

    ``roots`` overrides the root set of ``q`` (to exercise the check on sets
    that are not parabolics).
    """
    inside = frozenset(q.roots() if roots is None else roots)
    rs = q.rs
    index = {r.simple_coords: r for r in rs.all_roots}
    for b in inside:
        for g in inside:
            s = tuple(x + y for x, y in zip(b.simple_coords, g.simple_coords))
            r = index.get(s)
            if r is not None and r not in inside:
                return False
    return True


def excluded_classes(q: Parabolic) -> list:
    """Coarse classes with no root space inside ``q``."""
    return [c for c in coarse_classes(q.rs) if not any(_in_q(q, m) for m in c.members)]


def resonant_codimension(q: Parabolic) -> int:
    # classes are saturated, so testing the representative suffices
    return sum(1 for c in negative_coarse_classes(q.rs) if not support(c.representative) <= q.kept)


def maximal_parabolics(rs: RootSystem) -> list:
    return [parabolic(rs, (i,)) for i in range(1, rs.rank + 1)]


def corank2_parabolics(rs: RootSystem) -> list:
    if rs.rank < 2:
        raise RankTooSmall(f"{rs.label} has rank {rs.rank}; corank-2 parabolics need rank >= 2")
    return [parabolic(rs, pair) for pair in combinations(range(1, rs.rank + 1), 2)]


def all_parabolics(rs: RootSystem, proper_only: bool = False) -> list:
    """Every standard parabolic, ordered by corank then excluded indices."""
    n = rs.rank
    lo = 1 if proper_only else 0
    return [
        parabolic(rs, exc)
        for k in range(lo, n + 1)
        for exc in combinations(range(1, n + 1), k)
    ]

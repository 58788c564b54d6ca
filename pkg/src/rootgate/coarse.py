"""Coarse root classes: roots grouped under positive proportionality.

In a reduced system every class is a singleton.  Non-reduced (BC) systems
pair a root with its double.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import RootNotInSystem
from .rootsys import Root, RootSystem, root_order


@dataclass(frozen=True)
class CoarseClass:
    members: frozenset
    representative: Root

    @property
    def sign(self) -> str:
        return "positive" if self.representative.is_positive else "negative"

    @property
    def is_positive(self) -> bool:
        return self.representative.is_positive

    def __len__(self):
        return len(self.members)


def _sort_key(cls: CoarseClass):
    r = cls.representative
    return (not r.is_positive,) + root_order(r if r.is_positive else -r)


@lru_cache(maxsize=None)
def _classes(rs: RootSystem) -> tuple:
    roots = rs.all_roots
    out = []
    for r in roots:
        half = tuple(c // 2 for c in r.simple_coords)
        if all(c % 2 == 0 for c in r.simple_coords) and any(half):
            try:
                if rs.root(half) in roots:
                    continue  # r = 2*beta; recorded with beta
            except RootNotInSystem:
                pass
        members = {r}
        double = tuple(2 * c for c in r.simple_coords)
        try:
            members.add(rs.root(double))
        except RootNotInSystem:
            pass
        out.append(CoarseClass(frozenset(members), r))
    return tuple(sorted(out, key=_sort_key))


def coarse_classes(rs: RootSystem) -> list:
    """Partition of all roots into coarse classes.

    Positive classes come first, each half ordered like the positive roots of
    their representatives.
    """
    return list(_classes(rs))


@lru_cache(maxsize=None)
def _signed(rs: RootSystem, positive: bool) -> tuple:
    return tuple(c for c in _classes(rs) if c.is_positive == positive)


def positive_coarse_classes(rs: RootSystem) -> list:
    return list(_signed(rs, True))


def negative_coarse_classes(rs: RootSystem) -> tuple:
    return _signed(rs, False)


@lru_cache(maxsize=None)
def _lookup(rs: RootSystem) -> dict:
    return {m: c for c in _classes(rs) for m in c.members}


def coarse_class_of(rs: RootSystem, root: Root) -> CoarseClass:
    try:
        return _lookup(rs)[root]
    except KeyError:
        raise RootNotInSystem(f"{root.simple_coords} is not a root of {rs.label}") from None

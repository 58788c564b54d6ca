"""Named real semisimple Lie algebras and their restricted root systems.

Input language::

    algebra := factor ("x" factor)*
    factor  := sl(n,R|C|H) | sp(n,R) | so(p,q) | su(p,q) | sp(p,q)
             | so(n) | su(n) | sp(n) | <root system label, e.g. A3, BC2, G2>

Indefinite forms are normalised to ``p <= q``.  Low-rank coincidences such as
``so(3,3) = sl(4,R)`` are rejected instead of being resolved.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import CompactFactor, ParseError, UnsupportedAlgebra
from .rootsys import RootSystem, RootSystemType, build

_WS = re.compile(r"\s*")
_NAME = re.compile(r"(sl|sp|so|su)\s*\(", re.IGNORECASE)
_BARE = re.compile(r"(BC|A|B|C|D|E|F|G)_?(\d+)", re.IGNORECASE)
_INT = re.compile(r"\d+")
_FIELD = re.compile(r"[RCH]", re.IGNORECASE)
_SEP = re.compile(r"[x×]", re.IGNORECASE)


@dataclass(frozen=True)
class SimpleFactor:
    name: str
    restricted_type: Optional[RootSystemType]
    real_rank: int

    @property
    def compact(self) -> bool:
        return self.restricted_type is None


@dataclass(frozen=True)
class AlgebraDescriptor:
    factors: tuple

    @property
    def noncompact(self) -> tuple:
        return tuple(f for f in self.factors if not f.compact)

    @property
    def real_rank(self) -> int:
        return sum(f.real_rank for f in self.factors)

    @property
    def name(self) -> str:
        return render(self)

    def __str__(self):
        return render(self)


def _split(t: RootSystemType, name: str) -> SimpleFactor:
    return SimpleFactor(name, t, t.rank)


def _compact(name: str) -> SimpleFactor:
    return SimpleFactor(name, None, 0)


def _rank_one(name: str, nonreduced: bool) -> SimpleFactor:
    return _split(RootSystemType("BC" if nonreduced else "A", 1), name)


def catalog(kind: str, args: tuple) -> SimpleFactor:
    """Look up one simple factor, e.g. ``catalog("su", (2, 5))``."""
    kind = kind.lower()
    if len(args) == 2 and isinstance(args[1], str):
        n, fld = args
        fld = fld.upper()
        name = f"{kind}({n},{fld})"
        if kind == "sl":
            if n < 2:
                raise UnsupportedAlgebra(f"{name} is not semisimple")
            return _split(RootSystemType("A", n - 1), name)
        if kind == "sp" and fld == "R":
            if n < 1:
                raise UnsupportedAlgebra(f"{name} is not semisimple")
            return _split(RootSystemType("C", n), name) if n >= 2 else _rank_one(name, False)
        raise UnsupportedAlgebra(f"{name} is not in the catalog")

    if len(args) == 1:
        (n,) = args
        name = f"{kind}({n})"
        if kind == "sl":
            raise UnsupportedAlgebra(f"{name}: give the field, e.g. sl({n},R)")
        lowest = {"so": 3, "su": 2, "sp": 1}[kind]
        if n < lowest:
            raise UnsupportedAlgebra(f"{name} is not semisimple")
        return _compact(name)

    p, q = sorted(args)
    if kind == "sl":
        raise UnsupportedAlgebra(f"sl({args[0]},{args[1]}) is not in the catalog")
    if p == 0:
        return catalog(kind, (q,))
    name = f"{kind}({p},{q})"
    if kind == "so":
        if p == q:
            if p < 4:
                raise UnsupportedAlgebra(f"{name}: so(n,n) is supported for n >= 4 only")
            return _split(RootSystemType("D", p), name)
        if p == 1:
            if q < 2:
                raise UnsupportedAlgebra(f"{name} is not semisimple")
            return _rank_one(name, False)
        return _split(RootSystemType("B", p), name)
    # su(p,q) and sp(p,q)
    if p < q:
        return _split(RootSystemType("BC", p), name)
    return _split(RootSystemType("C", p), name) if p >= 2 else _rank_one(name, False)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        self.pos = _WS.match(self.text, self.pos).end()

    def expect(self, pattern, what):
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        return m

    def literal(self, ch):
        self.skip()
        if not self.text.startswith(ch, self.pos):
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def algebra(self) -> AlgebraDescriptor:
        factors = [self.factor()]
        while True:
            self.skip()
            if self.pos == len(self.text):
                break
            self.expect(_SEP, "'x' or end of input")
            factors.append(self.factor())
        return AlgebraDescriptor(tuple(factors))

    def factor(self) -> SimpleFactor:
        self.skip()
        if self.pos == len(self.text):
            self.fail("expected an algebra name")
        m = _NAME.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            args = [int(self.expect(_INT, "an integer").group())]
            self.skip()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                self.skip()
                fm = _FIELD.match(self.text, self.pos)
                if fm:
                    self.pos = fm.end()
                    args.append(fm.group().upper())
                else:
                    args.append(int(self.expect(_INT, "an integer or field R/C/H").group()))
            self.literal(")")
            return catalog(m.group(1), tuple(args))
        m = _BARE.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            t = RootSystemType.parse(m.group())
            return _split(t, t.label)
        self.fail("unknown algebra name")


def parse_algebra(text: str) -> AlgebraDescriptor:
    """Parse e.g. ``"su(3) x sl(2,R)"`` into a descriptor.

    Raises :class:`ParseError` (with a position) on malformed input,
    :class:`UnsupportedAlgebra` for names outside the catalog and
    :class:`InvalidRank` for bare types such as ``D3``.
    """
    if not isinstance(text, str):
        raise ParseError("expected a string", "", 0)
    return _Parser(text).algebra()


def render(alg: AlgebraDescriptor) -> str:
    return " x ".join(f.name for f in alg.factors)


def restricted_root_system(factor: SimpleFactor) -> RootSystem:
    if factor.compact:
        raise CompactFactor(f"{factor.name} is compact and has no restricted roots")
    return build(factor.restricted_type)


def as_algebra(obj) -> AlgebraDescriptor:
    """Coerce a string, type, root system or descriptor to a descriptor."""
    if isinstance(obj, AlgebraDescriptor):
        return obj
    if isinstance(obj, str):
        return parse_algebra(obj)
    if isinstance(obj, RootSystem):
        obj = obj.rs_type
    if isinstance(obj, RootSystemType):
        return AlgebraDescriptor((_split(obj, obj.label),))
    raise TypeError(f"cannot interpret {obj!r} as an algebra")


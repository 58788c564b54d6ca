"""Text rendering: roots as strings and ASCII Dynkin diagrams."""
from __future__ import annotations

from fractions import Fraction

from .rootsys import RootSystem, RootSystemType


def _term(c: Fraction, i: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    coef = "" if mag == 1 else str(mag)
    return f"{sign}{coef}e{i}"


def format_ambient(vec) -> str:
    """``(1, -1, 0)`` -> ``e1-e2``; half-integer vectors as ``1/2(e1-e2-...)``."""
    nz = [(i + 1, Fraction(c)) for i, c in enumerate(vec) if c != 0]
    if not nz:
        return "0"
    if all(abs(c) == Fraction(1, 2) for _, c in nz) and len(nz) > 1:
        inner = "".join(_term(2 * c, i, k == 0) for k, (i, c) in enumerate(nz))
        return f"1/2({inner})"
    return "".join(_term(c, i, k == 0) for k, (i, c) in enumerate(nz))


def format_coords(coords) -> str:
    """``(1, 2)`` -> ``a1+2a2``."""
    parts = []
    for i, c in enumerate(coords, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}a{i}")
    return "".join(parts) or "0"


def _chain(bonds, labels):
    """One row of nodes joined by bond strings, with a label row below."""
    line = "o"
    positions = [0]
    for b in bonds:
        line += b + "o"
        positions.append(len(line) - 1)
    lab = [" "] * (len(line) + 4)
    for pos, text in zip(positions, labels):
        for k, ch in enumerate(text):
            if pos + k >= len(lab):
                lab.append(ch)
            else:
                lab[pos + k] = ch
    return line, "".join(lab).rstrip(), positions


def dynkin(rs_type) -> str:
    """ASCII Dynkin diagram with nodes labelled 1..n (Bourbaki order).

    Multiple bonds point from long to short roots, e.g. ``o---o=>=o`` for B3.
    BC_n is drawn as B_n with the doubled last root noted.
    """
    if isinstance(rs_type, RootSystem):
        rs_type = rs_type.rs_type
    if isinstance(rs_type, str):
        rs_type = RootSystemType.parse(rs_type)
    fam, n = rs_type.family, rs_type.rank
    single = "---"
    labels = [str(i) for i in range(1, n + 1)]

    if fam == "A":
        line, lab, _ = _chain([single] * (n - 1), labels)
        return f"{line}\n{lab}"
    if fam in ("B", "BC", "C"):
        last = "=<=" if fam == "C" else "=>="
        line, lab, _ = _chain([single] * (n - 2) + [last] if n >= 2 else [], labels)
        if fam == "BC":
            line += "*"
            return f"{line}\n{lab}\n* node {n} also carries 2a{n} (non-reduced)"
        return f"{line}\n{lab}"
    if fam == "D":
        line, lab, pos = _chain([single] * (n - 2), labels[: n - 1])
        col = pos[n - 3]
        return "\n".join([line, lab, " " * col + "|", " " * col + "o " + str(n)])
    if fam in ("E6", "E7", "E8"):
        order = [1] + list(range(3, n + 1))
        line, lab, pos = _chain([single] * (n - 2), [str(i) for i in order])
        col = pos[order.index(4)]
        return "\n".join([line, lab, " " * col + "|", " " * col + "o 2"])
    if fam == "F4":
        line, lab, _ = _chain([single, "=>=", single], labels)
        return f"{line}\n{lab}"
    if fam == "G2":
        line, lab, _ = _chain(["=<="], labels)
        return f"{line}  (triple bond)\n{lab}"
    raise ValueError(f"no diagram for {rs_type}")

"""The dimension thresholds r and m, and the regime a manifold dimension falls in.

``r`` is the least resonant codimension over maximal standard parabolics,
``m`` the least over parabolics omitting two distinct simple roots (``m = 1``
in real rank one).  For semisimple algebras both are minima over the
non-compact simple factors.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NoNoncompactFactor
from .parabolic import corank2_parabolics, maximal_parabolics, parabolic, resonant_codimension
from .realforms import as_algebra, restricted_root_system
from .rootsys import RootSystem


@dataclass(frozen=True)
class InvariantReport:
    r_value: int
    m_value: int
    r_witnesses: tuple
    m_witnesses: tuple


class Regime(str, enum.Enum):
    INVARIANT_MEASURE = "InvariantMeasure"
    CRITICAL_DIMENSION = "CriticalDimension"
    PROJECTIVE_FACTOR = "ProjectiveFactor"
    ABOVE_THRESHOLDS = "AboveThresholds"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RegimeVerdict:
    regime: Regime
    dim: int
    thresholds: tuple
    notes: tuple

    @property
    def summary(self) -> str:
        r, m = self.thresholds
        d = self.dim
        if self.regime is Regime.INVARIANT_MEASURE:
            return f"{self.regime} (dim {d} < r = {r})"
        if self.regime is Regime.CRITICAL_DIMENSION:
            return f"{self.regime} (dim = r = {r})"
        if self.regime is Regime.PROJECTIVE_FACTOR:
            return f"{self.regime} (r = {r} < dim {d} <= m = {m})"
        return f"{self.regime} (dim {d} > m = {m})"


def _minimise(candidates):
    values = [(resonant_codimension(q), q) for q in candidates]
    best = min(v for v, _ in values)
    return best, tuple(q for v, q in values if v == best)


def simple_r(rs: RootSystem):
    """(r, witnesses) for one irreducible restricted root system."""
    return _minimise(maximal_parabolics(rs))


def simple_m(rs: RootSystem):
    if rs.rank == 1:
        # m = 1 by convention in rank one; the minimal parabolic realises it
        q = parabolic(rs, (1,))
        return 1, (q,)
    return _minimise(corank2_parabolics(rs))


def _systems(alg) -> list:
    alg = as_algebra(alg)
    systems = [restricted_root_system(f) for f in alg.noncompact]
    if not systems:
        raise NoNoncompactFactor(f"{alg} has no non-compact simple factor")
    return systems


def _combine(per_factor):
    best = min(v for v, _ in per_factor)
    witnesses = tuple(q for v, ws in per_factor if v == best for q in ws)
    return best, witnesses


def r_invariant(alg):
    """``(r, witnesses)``; witnesses are parabolics of the attaining factors."""
    return _combine([simple_r(rs) for rs in _systems(alg)])


def m_invariant(alg):
    return _combine([simple_m(rs) for rs in _systems(alg)])


def invariant_report(alg) -> InvariantReport:
    r, rw = r_invariant(alg)
    m, mw = m_invariant(alg)
    return InvariantReport(r, m, rw, mw)


_NOTES = {
    Regime.INVARIANT_MEASURE: "dim M < r(G): every C^(1+beta) action of a lattice in G on M "
    "admits an invariant Borel probability measure",
    Regime.CRITICAL_DIMENSION: "dim M = r(G): either an invariant Borel probability measure exists, "
    "or the action is measurably a finite extension of the right action on Q\\G, Q maximal parabolic",
    Regime.PROJECTIVE_FACTOR: "dim M <= m(G): some quasi-invariant measure makes the action a "
    "relatively measure-preserving extension of the right action on Q\\G, Q standard parabolic",
    Regime.ABOVE_THRESHOLDS: "dim M > m(G): no conclusion is available from these thresholds",
}

_SURFACE_NOTE = (
    "surfaces, sl(n,R) with n >= 4: every C^(1+beta) action of a finite-index subgroup of "
    "SL(n,Z), or of a nonuniform lattice on a surface of genus >= 1, is trivial"
)


def _regime(dim: int, r: int, m: int) -> Regime:
    if dim < r:
        return Regime.INVARIANT_MEASURE
    if dim == r:
        return Regime.CRITICAL_DIMENSION
    if dim <= m:
        return Regime.PROJECTIVE_FACTOR
    return Regime.ABOVE_THRESHOLDS


def classify_regime(alg, dim: int) -> RegimeVerdict:
    """Place a manifold dimension relative to (r, m).

    dim = r is reported as CriticalDimension, the sharper of the two results
    that apply there.
    """
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dimension must be a positive integer, got {dim!r}")
    alg = as_algebra(alg)
    r, _ = r_invariant(alg)
    m, _ = m_invariant(alg)
    regime = _regime(dim, r, m)
    notes = [_NOTES[regime]]
    if regime is Regime.CRITICAL_DIMENSION and dim <= m:
        notes.append(_NOTES[Regime.PROJECTIVE_FACTOR])
    if dim == 2 and _is_large_sl_real(alg):
        notes.append(_SURFACE_NOTE)
    if alg.real_rank < 2:
        notes.append("real rank < 2: lattices are not higher-rank, thresholds are formal only")
    return RegimeVerdict(regime, dim, (r, m), tuple(notes))


def _is_large_sl_real(alg) -> bool:
    if len(alg.factors) != 1:
        return False
    name = alg.factors[0].name
    if not (name.startswith("sl(") and name.endswith(",R)")):
        return False
    return int(name[3:-3]) >= 4

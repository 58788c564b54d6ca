"""Restricted root systems, resonant codimension and the thresholds r, m."""

__version__ = "0.1.0"

from .coarse import CoarseClass, coarse_class_of, coarse_classes
from .errors import (
    CompactFactor,
    InvalidRank,
    InvariantViolation,
    NoNoncompactFactor,
    NonConvergence,
    ParseError,
    RankTooLarge,
    RankTooSmall,
    RootgateError,
    RootNotInSystem,
    UnsupportedAlgebra,
)
from .invariants import (
    InvariantReport,
    Regime,
    RegimeVerdict,
    classify_regime,
    invariant_report,
    m_invariant,
    r_invariant,
)
from .parabolic import (
    Parabolic,
    contains_root_space,
    corank2_parabolics,
    maximal_parabolics,
    parabolic,
    resonant_codimension,
    verify_closure,
)
from .realforms import AlgebraDescriptor, SimpleFactor, parse_algebra, restricted_root_system
from .rootsys import (
    DirectSum,
    Root,
    RootSystem,
    RootSystemType,
    build,
    cartan_matrix,
    closure_oracle,
    direct_sum,
    enumerate_positive_roots,
    support,
)


def clear_caches():
    """Drop memoised root systems and coarse classes (for cold timings)."""
    from . import coarse, rootsys

    rootsys._build.cache_clear()
    for fn in (coarse._classes, coarse._signed, coarse._lookup):
        fn.cache_clear()

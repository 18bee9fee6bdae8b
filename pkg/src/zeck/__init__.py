"""Zeckendorf-type decompositions and exact summand-count statistics.

Supports any positive linear recurrence numeration system (Fibonacci
and base-B included), the signed far-difference representation, exact
density and moment tables, and brute-force oracles for verifying all of
it at small scale.
"""

from .combinatorics import (
    DensityTable,
    JointTable,
    binom,
    joint_count,
    joint_table,
    mean_closed,
    script_E,
    stars_and_bars,
    variance_closed,
    weighted_geom,
    zeck_count,
    zeck_density,
)
from .decompose import (
    Decomposition,
    SignedDecomposition,
    decompose,
    fardiff,
    fardiff_valid,
    is_legal,
    reconstruct,
    summand_count,
    zeckendorf,
)
from .gaussian import (
    FardiffStats,
    GaussFit,
    MomentReport,
    StirlingFactors,
    exact_moments,
    fardiff_stats,
    gauss_profile,
    stirling_f,
)
from .oracle import (
    BijectionReport,
    DuplicateValueError,
    TooLargeError,
    empirical_density,
    empirical_joint,
    enumerate_fardiff,
    enumerate_legal,
    verify_bijection,
)
from .sequences import (
    FIBONACCI,
    PHI,
    SQRT5,
    PlrsSpec,
    QuadRat,
    SequenceCache,
    binet_estimate,
    fardiff_S,
    fib,
    make_plrs,
    parse_spec,
    terms,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionReport",
    "Decomposition",
    "DensityTable",
    "DuplicateValueError",
    "FIBONACCI",
    "FardiffStats",
    "GaussFit",
    "JointTable",
    "MomentReport",
    "PHI",
    "PlrsSpec",
    "QuadRat",
    "SQRT5",
    "SequenceCache",
    "SignedDecomposition",
    "StirlingFactors",
    "TooLargeError",
    "binet_estimate",
    "binom",
    "decompose",
    "empirical_density",
    "empirical_joint",
    "enumerate_fardiff",
    "enumerate_legal",
    "exact_moments",
    "fardiff",
    "fardiff_S",
    "fardiff_stats",
    "fardiff_valid",
    "fib",
    "gauss_profile",
    "is_legal",
    "joint_count",
    "joint_table",
    "make_plrs",
    "mean_closed",
    "parse_spec",
    "reconstruct",
    "script_E",
    "stars_and_bars",
    "stirling_f",
    "summand_count",
    "terms",
    "variance_closed",
    "verify_bijection",
    "weighted_geom",
    "zeck_count",
    "zeck_density",
    "zeckendorf",
]

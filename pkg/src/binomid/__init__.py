"""Exact symbolic engine for a generalized curious binomial identity.

Sparse multivariate polynomials over arbitrary-precision rationals, the
binomial lemmas (upper negation, absorption, trinomial revision), both
sides of the main identity and every intermediate form of its proof, and
a verification/benchmark layer with a seeded randomized point oracle.
"""

from .binomials import (
    binom_int,
    binom_poly,
    falling_factorial,
    negate_upper,
    trinomial_revision_check,
)
from .identities import (
    RING_ABC,
    RING_T,
    RING_XYZ,
    RING_XZ,
    ChebyshevU,
    binomial_collapse,
    chebyshev_closed,
    chebyshev_recurrence,
    chebyshev_trig_check,
    f_closed,
    f_def,
    g_closed,
    g_def,
    jensen_lhs,
    jensen_rhs,
    lhs_identity,
    rhs_identity,
    telescoped_sum,
)
from .rings import Polynomial, Ring, rat
from .verify import (
    BenchReport,
    IdentityReport,
    PointSample,
    RandomCheckReport,
    SplitMix64,
    bench,
    random_point_check,
    sweep,
    verify_identity,
    verify_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "ChebyshevU",
    "IdentityReport",
    "PointSample",
    "Polynomial",
    "RandomCheckReport",
    "Ring",
    "RING_ABC",
    "RING_T",
    "RING_XYZ",
    "RING_XZ",
    "SplitMix64",
    "bench",
    "binom_int",
    "binom_poly",
    "binomial_collapse",
    "chebyshev_closed",
    "chebyshev_recurrence",
    "chebyshev_trig_check",
    "f_closed",
    "f_def",
    "falling_factorial",
    "g_closed",
    "g_def",
    "jensen_lhs",
    "jensen_rhs",
    "lhs_identity",
    "negate_upper",
    "random_point_check",
    "rat",
    "rhs_identity",
    "sweep",
    "telescoped_sum",
    "trinomial_revision_check",
    "verify_identity",
    "verify_lemma",
]

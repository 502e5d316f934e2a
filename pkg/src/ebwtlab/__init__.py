"""Word decompositions and the run count of their extended
Burrows-Wheeler transform.

The transform of a multiset of words concatenates the last symbols of
all their rotations sorted in omega-order; how a word is cut into parts
changes the transform and with it the number of runs.  This package
builds and inverts the transform, enumerates and counts the admissible
decompositions, searches them exhaustively for the extremal run counts,
realizes the constructive near-optimal block decomposition, and
constructs the adversarial families on which every decomposition stays
maximally incompressible.
"""

from .words import (
    Alphabet,
    RootExp,
    least_rotation,
    omega_compare,
    omega_sorted,
    root_exp,
    rotations,
    runs,
)
from .transform import bwt, ebwt, ebwt_matrix, first_column, invert_ebwt, rho
from .decompositions import (
    DEFAULT_SEARCH_LIMIT,
    BoundCheck,
    SearchCancelled,
    SearchLimitError,
    SearchResult,
    apply_composition,
    block_decomposition,
    count_decompositions,
    enumerate_compositions,
    generalized_fibonacci,
    growth_rate,
    lyndon_factorization,
    search_extremes,
    verify_best_bound,
)
from .worstcase import (
    CycleSystem,
    PreimageFamily,
    WorstFamily,
    artin_candidate,
    artin_scan,
    cycle_solutions,
    fixed_point_free,
    preimage_ba,
    verify_circulant_inverse,
    worst_family,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "RootExp",
    "runs",
    "rotations",
    "root_exp",
    "omega_compare",
    "omega_sorted",
    "least_rotation",
    "bwt",
    "ebwt",
    "ebwt_matrix",
    "first_column",
    "invert_ebwt",
    "rho",
    "DEFAULT_SEARCH_LIMIT",
    "SearchLimitError",
    "SearchCancelled",
    "SearchResult",
    "BoundCheck",
    "enumerate_compositions",
    "count_decompositions",
    "generalized_fibonacci",
    "growth_rate",
    "apply_composition",
    "search_extremes",
    "block_decomposition",
    "verify_best_bound",
    "lyndon_factorization",
    "PreimageFamily",
    "CycleSystem",
    "WorstFamily",
    "preimage_ba",
    "cycle_solutions",
    "fixed_point_free",
    "worst_family",
    "verify_circulant_inverse",
    "artin_candidate",
    "artin_scan",
    "__version__",
]

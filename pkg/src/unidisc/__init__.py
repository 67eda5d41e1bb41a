"""Single-shot distinguishability of two-qubit unitaries.

The library answers one question in two flavors: given two two-qubit
unitaries U1 and U2 applied once to a chosen pure input, how well can the two
be told apart, and does restricting the input to a product state hurt?  Both
answers reduce to convex geometry on the eigenphase spectrum of U1' U2 in the
Bell basis whenever that product is Bell-diagonal; a seeded brute-force
oracle covers the rest and doubles as an independent check.
"""

from .canonical import (
    CanonicalForm,
    bell_diagonal_phases,
    canonical_decompose,
    d_from_eigenphases,
    eigenphases_from_d,
    in_weyl_chamber,
    interaction_unitary,
    is_diagonal_form,
    random_interaction_vector,
    wrap_angle,
)
from .config import DEFAULT_TOLERANCES, MAX_REPETITIONS, Tolerances
from .discrimination import (
    DiscriminationReport,
    distinguishability,
    fidelity_global,
    fidelity_local,
    full_report,
    local_unitary_fidelity,
    min_repetitions_for_perfect,
)
from .errors import (
    DecompositionFailed,
    DisagreementError,
    IdenticalUnitaries,
    InconsistentSpectrum,
    InvalidArgument,
    InvalidState,
    NonDiagonalProduct,
    NotAProductState,
    NotUnitary,
    RepetitionLimitExceeded,
    SchemaError,
    TargetNotInHull,
    UnidiscError,
)
from .gates import CNOT, CZ, IDENTITY, ISWAP, SQRT_SWAP, SWAP, cphase, local_phase, named_gate, xx
from .hull import (
    HullAnalysis,
    Polygon,
    analyze,
    contains_origin,
    convex_hull,
    distance_to_origin,
    global_hull,
    local_hull,
    spectrum_points,
    witness_weights,
)
from .oracle import OracleConfig, OracleResult, brute_fidelity_global, brute_fidelity_product, brute_helstrom
from .states import (
    BELL_BASIS,
    Priors,
    ProductState,
    bell_to_computational,
    computational_to_bell,
    concurrence,
    factor_product_state,
    success_probability_pure,
)
from .svgrender import render_hull_svg

__version__ = "0.1.0"

__all__ = [
    "BELL_BASIS",
    "CNOT",
    "CZ",
    "CanonicalForm",
    "DEFAULT_TOLERANCES",
    "DecompositionFailed",
    "DisagreementError",
    "DiscriminationReport",
    "HullAnalysis",
    "IDENTITY",
    "ISWAP",
    "IdenticalUnitaries",
    "InconsistentSpectrum",
    "InvalidArgument",
    "InvalidState",
    "MAX_REPETITIONS",
    "NonDiagonalProduct",
    "NotAProductState",
    "NotUnitary",
    "OracleConfig",
    "OracleResult",
    "Polygon",
    "Priors",
    "ProductState",
    "RepetitionLimitExceeded",
    "SQRT_SWAP",
    "SWAP",
    "SchemaError",
    "TargetNotInHull",
    "Tolerances",
    "UnidiscError",
    "analyze",
    "bell_diagonal_phases",
    "bell_to_computational",
    "brute_fidelity_global",
    "brute_fidelity_product",
    "brute_helstrom",
    "canonical_decompose",
    "computational_to_bell",
    "concurrence",
    "contains_origin",
    "convex_hull",
    "cphase",
    "d_from_eigenphases",
    "distance_to_origin",
    "distinguishability",
    "eigenphases_from_d",
    "factor_product_state",
    "fidelity_global",
    "fidelity_local",
    "full_report",
    "global_hull",
    "in_weyl_chamber",
    "interaction_unitary",
    "is_diagonal_form",
    "local_hull",
    "local_phase",
    "local_unitary_fidelity",
    "min_repetitions_for_perfect",
    "named_gate",
    "random_interaction_vector",
    "render_hull_svg",
    "spectrum_points",
    "success_probability_pure",
    "witness_weights",
    "wrap_angle",
    "xx",
]

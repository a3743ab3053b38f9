"""Bell-CHSH values of paired-mode operator representations.

Entangled states are stored as Schmidt coefficient vectors; dichotomic
measurement operators are assembled from mode pairings, whose pair count
fixes the operator trace and thereby separates unitarily inequivalent
representations.  CHSH expectation values come from two independent
routes (a dense contraction oracle and a closed form), with optimizers
over the angles and the squeezing parameter, plus reduced-density purity
and entropy diagnostics.
"""

from .chsh import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
    ChshReport,
    ViolationInterval,
    angle_combination,
    canonical_angles,
    chsh_bounds,
    chsh_skewed_rep1,
    chsh_skewed_rep2,
    chsh_squeezed_all_pairs,
    chsh_squeezed_single_pair,
    chsh_value,
    correlation_closed,
    correlation_dense_tensor,
    correlation_oracle,
    paired_weight,
    singleton_weight,
    violation_window_single_pair,
)
from .entanglement import (
    ReducedDensity,
    entropy,
    entropy_closed_squeezed,
    purity,
    purity_closed_squeezed,
    reduced_density,
)
from .errors import ConsistencyError, ValidationError
from .operators import (
    AngleSet,
    BellOperator,
    PairingSpec,
    VerificationReport,
    build_operator,
    canonical_pairing,
    inequivalence_by_trace,
    pseudospin,
    pseudospin_bell,
    verify_bell_operator,
)
from .optimize import (
    EtaOptimum,
    OptimResult,
    RepresentationSummary,
    enumerate_representations,
    golden_section_maximize,
    optimize_angles,
    optimize_eta,
)
from .states import SchmidtState, maximal_state, skewed_state, squeezed_state

__version__ = "0.1.0"

__all__ = [
    "AngleSet",
    "BellOperator",
    "CLASSICAL_BOUND",
    "ChshReport",
    "ConsistencyError",
    "EtaOptimum",
    "OptimResult",
    "PairingSpec",
    "ReducedDensity",
    "RepresentationSummary",
    "SchmidtState",
    "TSIRELSON_BOUND",
    "ValidationError",
    "VerificationReport",
    "ViolationInterval",
    "angle_combination",
    "build_operator",
    "canonical_angles",
    "canonical_pairing",
    "chsh_bounds",
    "chsh_skewed_rep1",
    "chsh_skewed_rep2",
    "chsh_squeezed_all_pairs",
    "chsh_squeezed_single_pair",
    "chsh_value",
    "correlation_closed",
    "correlation_dense_tensor",
    "correlation_oracle",
    "enumerate_representations",
    "entropy",
    "entropy_closed_squeezed",
    "golden_section_maximize",
    "inequivalence_by_trace",
    "maximal_state",
    "optimize_angles",
    "optimize_eta",
    "paired_weight",
    "pseudospin",
    "pseudospin_bell",
    "purity",
    "purity_closed_squeezed",
    "reduced_density",
    "singleton_weight",
    "skewed_state",
    "squeezed_state",
    "verify_bell_operator",
    "violation_window_single_pair",
]

"""CHSH expectation values computed two independent ways.

The oracle route contracts dense operator matrices against the Schmidt
vector: for a state sum_n c_n |n>_a |n>_b,

    <A (x) B> = sum_{m,n} c_m c_n A[m, n] B[m, n],

which needs only dim x dim matrices even though the joint space is
dim^2-dimensional.  The closed-form route evaluates

    sum_pairs 2 c_i c_j cos(alpha + beta) + sum_singletons c_k^2

for operators built from one shared pairing with angles alpha and beta.
The two routes must always agree; every higher-level closed form in this
module is validated against the oracle in the test suite.

The CHSH combination <A1 B1> + <A2 B1> + <A1 B2> - <A2 B2> then reduces to
K(angles) * sum_pairs 2 c_i c_j + 2 * sum_singletons c_k^2 with

    K = cos(a1+b1) + cos(a2+b1) + cos(a1+b2) - cos(a2+b2),

whose extreme value over angles is 2*sqrt(2).  Values above 2 violate the
classical bound; 2*sqrt(2) is the quantum ceiling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ValidationError
from .operators import AngleSet, BellOperator, PairingSpec, build_operator
from .states import SchmidtState

TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
CLASSICAL_BOUND = 2.0
VIOLATION_EPS = 1e-12
IMAG_RESIDUAL_TOL = 1e-10
DEFAULT_SATURATION_TOL = 1e-9

_METHODS = ("oracle", "closed_form")


@dataclass(frozen=True)
class ChshReport:
    """Outcome of one CHSH evaluation."""

    value: float
    method: str
    angles: AngleSet
    violated: bool
    saturates_tsirelson: bool
    imag_residual: float

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "angles": self.angles.to_json_list(),
            "violated": self.violated,
            "saturates_tsirelson": self.saturates_tsirelson,
            "imag_residual": self.imag_residual,
        }


@dataclass(frozen=True)
class ViolationInterval:
    """Range of CHSH maxima reachable by pairing representations of one dimension."""

    lower: float
    upper: float
    dim: int
    parity: str

    def to_json_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "dim": self.dim, "parity": self.parity}


def canonical_angles() -> AngleSet:
    """The angle choice attaining K = 2*sqrt(2): (0, pi/2, -pi/4, pi/4)."""
    return AngleSet(0.0, math.pi / 2.0, -math.pi / 4.0, math.pi / 4.0)


def angle_combination(angles: AngleSet) -> float:
    """K = cos(a1+b1) + cos(a2+b1) + cos(a1+b2) - cos(a2+b2)."""
    a1, a2, b1, b2 = angles.as_tuple()
    return math.cos(a1 + b1) + math.cos(a2 + b1) + math.cos(a1 + b2) - math.cos(a2 + b2)


def paired_weight(state: SchmidtState, spec: PairingSpec) -> float:
    """sum over pairs of 2 c_i c_j."""
    _check_dims(state.dim, spec.dim)
    c = state.coeffs
    return float(sum(2.0 * c[i] * c[j] for i, j in spec.pairs))


def singleton_weight(state: SchmidtState, spec: PairingSpec) -> float:
    """sum over singleton modes of c_k^2 (retained modes only)."""
    _check_dims(state.dim, spec.dim)
    c = state.coeffs
    return float(sum(c[k] * c[k] for k in spec.singletons))


def _check_dims(*dims: int) -> None:
    if len(set(dims)) != 1:
        raise ValidationError(f"dimension mismatch: {dims}")


def _schmidt_expectation(state: SchmidtState, a: BellOperator, b: BellOperator) -> complex:
    _check_dims(state.dim, a.dim, b.dim)
    c = state.coeffs
    return complex(np.einsum("m,n,mn,mn->", c, c, a.matrix, b.matrix))


def correlation_oracle(state: SchmidtState, a: BellOperator, b: BellOperator) -> float:
    """Expectation <A (x) B> by direct contraction against the Schmidt vector."""
    value = _schmidt_expectation(state, a, b)
    if abs(value.imag) >= IMAG_RESIDUAL_TOL:
        raise ConsistencyError(f"imaginary residual {value.imag} exceeds {IMAG_RESIDUAL_TOL}")
    return value.real


def correlation_dense_tensor(state: SchmidtState, a: BellOperator, b: BellOperator) -> float:
    """Debug route materializing the full dim^2 x dim^2 tensor product.

    Builds A (x) I and I (x) B explicitly, checks they commute, and contracts
    against the explicit joint state vector.  Quadratically more expensive
    than the oracle; intended for small dimensions.
    """
    _check_dims(state.dim, a.dim, b.dim)
    dim = state.dim
    eye = np.eye(dim)
    a_full = np.kron(a.matrix, eye)
    b_full = np.kron(eye, b.matrix)
    commutator_defect = float(np.abs(a_full @ b_full - b_full @ a_full).max())
    if commutator_defect > 1e-12:
        raise ConsistencyError(f"[A x I, I x B] defect {commutator_defect} exceeds 1e-12")
    psi = np.zeros(dim * dim, dtype=complex)
    psi[np.arange(dim) * dim + np.arange(dim)] = state.coeffs
    value = complex(psi.conj() @ (a_full @ (b_full @ psi)))
    if abs(value.imag) >= IMAG_RESIDUAL_TOL:
        raise ConsistencyError(f"imaginary residual {value.imag} exceeds {IMAG_RESIDUAL_TOL}")
    return value.real


def correlation_closed(state: SchmidtState, spec: PairingSpec, angle_sum: float) -> float:
    """Closed-form <A (x) B> for operators sharing one pairing.

    angle_sum is alpha + beta for the two operators.  Matches
    correlation_oracle on the same truncated state to float precision.
    """
    return paired_weight(state, spec) * math.cos(angle_sum) + singleton_weight(state, spec)


def chsh_value(
    state: SchmidtState,
    spec: PairingSpec,
    angles: AngleSet,
    method: str = "closed_form",
    saturation_tol: float = DEFAULT_SATURATION_TOL,
) -> ChshReport:
    """Evaluate the CHSH combination for one pairing and angle set.

    Both measurement sides use operators built from the same pairing, the
    A side with (alpha1, alpha2) and the B side with (beta1, beta2).
    """
    if method not in _METHODS:
        raise ValidationError(f"method must be one of {_METHODS}, got {method!r}")
    _check_dims(state.dim, spec.dim)
    imag_residual = 0.0
    if method == "oracle":
        a1 = build_operator(spec, angles.alpha1)
        a2 = build_operator(spec, angles.alpha2)
        b1 = build_operator(spec, angles.beta1)
        b2 = build_operator(spec, angles.beta2)
        terms = [
            _schmidt_expectation(state, a1, b1),
            _schmidt_expectation(state, a2, b1),
            _schmidt_expectation(state, a1, b2),
            _schmidt_expectation(state, a2, b2),
        ]
        imag_residual = max(abs(t.imag) for t in terms)
        if imag_residual >= IMAG_RESIDUAL_TOL:
            raise ConsistencyError(f"imaginary residual {imag_residual} exceeds {IMAG_RESIDUAL_TOL}")
        value = terms[0].real + terms[1].real + terms[2].real - terms[3].real
    else:
        value = angle_combination(angles) * paired_weight(state, spec) + 2.0 * singleton_weight(state, spec)
    return ChshReport(
        value=value,
        method=method,
        angles=angles,
        violated=value > CLASSICAL_BOUND + VIOLATION_EPS,
        saturates_tsirelson=abs(value - TSIRELSON_BOUND) < saturation_tol,
        imag_residual=imag_residual,
    )


def chsh_bounds(dim: int) -> ViolationInterval:
    """CHSH maxima reachable on the maximal state of a given dimension.

    The lower endpoint is the single-pair representation; the upper endpoint
    is the fully paired one for even dimensions, and the best achievable
    floor(dim/2)-pair layout for odd dimensions, which stays strictly below
    2*sqrt(2) because one mode always remains unpaired.
    """
    if dim < 3:
        raise ValidationError(f"dim must be >= 3, got {dim}")
    lower = (2.0 * TSIRELSON_BOUND + 2.0 * (dim - 2)) / dim
    if dim % 2 == 0:
        upper = TSIRELSON_BOUND
        parity = "even"
    else:
        upper = (2.0 * (dim // 2) * TSIRELSON_BOUND + 2.0) / dim
        parity = "odd"
    return ViolationInterval(lower=lower, upper=upper, dim=dim, parity=parity)


def chsh_skewed_rep1(r: float) -> float:
    """CHSH of the skewed four-mode state with one pair of equal-weight modes.

    Closed form 2(1+r)/(3+r) + 4*sqrt(2)/(3+r) at the canonical angles.
    """
    _check_skew_parameter(r)
    return 2.0 * (1.0 + r) / (3.0 + r) + 4.0 * math.sqrt(2.0) / (3.0 + r)


def chsh_skewed_rep2(r: float) -> float:
    """CHSH of the skewed four-mode state with both modes paired.

    Closed form 4*sqrt(2)*sqrt(r)/(3+r) + 4*sqrt(2)/(3+r); reaches the
    quantum ceiling exactly at r = 1.
    """
    _check_skew_parameter(r)
    return 4.0 * math.sqrt(2.0) * (math.sqrt(r) + 1.0) / (3.0 + r)


def _check_skew_parameter(r: float) -> None:
    if not 0.0 < r <= 1.0:
        raise ValidationError(f"r must lie in (0, 1], got {r}")


def chsh_squeezed_single_pair(eta: float) -> float:
    """CHSH of the squeezed state pairing only the two lowest modes.

    Closed form 2 + 2(1 - eta^2)(2*sqrt(2)*eta - 1 - eta^2) at the canonical
    angles, on the untruncated state.
    """
    _check_squeeze_parameter(eta)
    return 2.0 + 2.0 * (1.0 - eta * eta) * (TSIRELSON_BOUND * eta - 1.0 - eta * eta)


def chsh_squeezed_all_pairs(eta: float) -> float:
    """CHSH of the squeezed state with every mode paired to its neighbor.

    Closed form 2*sqrt(2) * 2*eta / (1 + eta^2) on the untruncated state;
    approaches the quantum ceiling as eta -> 1.
    """
    _check_squeeze_parameter(eta)
    return TSIRELSON_BOUND * 2.0 * eta / (1.0 + eta * eta)


def _check_squeeze_parameter(eta: float) -> None:
    if not 0.0 <= eta < 1.0:
        raise ValidationError(f"eta must lie in [0, 1), got {eta}")


def violation_window_single_pair() -> tuple[float, float]:
    """Open interval of eta where the single-pair CHSH exceeds 2."""
    return (math.sqrt(2.0) - 1.0, 1.0)

"""Dichotomic Bell operators built from a mode-pairing layout.

A pairing splits the basis modes into ordered two-mode pairs plus leftover
singletons.  On a pair (i, j) the operator carries the phase-flip block

    entry(i, j) = e^{+i angle},   entry(j, i) = e^{-i angle},

and on every singleton mode it acts as the identity.  Operators of this
shape are Hermitian, square to the identity, and have trace equal to the
number of singleton modes.  Since the trace is invariant under unitary
conjugation, two such operators with different pair counts can never be
unitarily equivalent; equal traces remain inconclusive.

The pseudospin family assembles the same 2x2 blocks over consecutive mode
pairs (2n, 2n+1), giving truncated operators that satisfy the spin-1/2
commutation algebra exactly (the blocks close within each pair, so an even
cutoff introduces no boundary defect).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

HERMITICITY_TOL = 1e-12
INVOLUTION_TOL = 1e-12
TRACE_MATCH_TOL = 1e-9


@dataclass(frozen=True)
class PairingSpec:
    """Disjoint ordered mode pairs on a space of `dim` modes.

    Modes not referenced by any pair are singletons.  Within a pair (i, j)
    the first index receives the +angle phase and the second the -angle
    phase.
    """

    dim: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValidationError(f"dim must be >= 1, got {self.dim}")
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        seen: set[int] = set()
        for i, j in pairs:
            if i == j:
                raise ValidationError(f"pair ({i}, {j}) repeats a mode")
            for k in (i, j):
                if not 0 <= k < self.dim:
                    raise ValidationError(f"mode index {k} outside [0, {self.dim})")
                if k in seen:
                    raise ValidationError(f"mode {k} appears in more than one pair")
                seen.add(k)
        object.__setattr__(self, "pairs", pairs)

    @property
    def pair_count(self) -> int:
        return len(self.pairs)

    @property
    def singletons(self) -> tuple[int, ...]:
        paired = {m for pair in self.pairs for m in pair}
        return tuple(m for m in range(self.dim) if m not in paired)

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "pairs": [[i, j] for i, j in self.pairs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "PairingSpec":
        return cls(dim=int(data["dim"]), pairs=tuple((int(i), int(j)) for i, j in data["pairs"]))


@dataclass(frozen=True)
class AngleSet:
    """The four real angles of a Bell measurement setting, in radians."""

    alpha1: float
    alpha2: float
    beta1: float
    beta2: float

    def __post_init__(self) -> None:
        for name, value in self.__dict__.items():
            if not math.isfinite(value):
                raise ValidationError(f"angle {name} must be finite, got {value}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha1, self.alpha2, self.beta1, self.beta2)

    def to_json_list(self) -> list[float]:
        return [self.alpha1, self.alpha2, self.beta1, self.beta2]


@dataclass(frozen=True)
class BellOperator:
    """Dense Hermitian involutive matrix acting on one factor of the pair."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise ValidationError(f"operator matrix must be square, got shape {matrix.shape}")
        matrix = matrix.copy()
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace_value(self) -> float:
        return float(self.matrix.trace().real)

    def to_json_dict(self) -> dict:
        entries = [[float(z.real), float(z.imag)] for z in self.matrix.ravel()]
        return {"dim": self.dim, "entries": entries}

    @classmethod
    def from_json_dict(cls, data: dict) -> "BellOperator":
        dim = int(data["dim"])
        flat = np.array([complex(re, im) for re, im in data["entries"]])
        if flat.size != dim * dim:
            raise ValidationError(f"expected {dim * dim} entries, got {flat.size}")
        return cls(flat.reshape(dim, dim))


@dataclass(frozen=True)
class VerificationReport:
    """Hermiticity / involution diagnostics of an operator."""

    hermitian: bool
    involutive: bool
    trace: float
    max_hermiticity_defect: float
    max_involution_defect: float

    def to_json_dict(self) -> dict:
        return {
            "hermitian": self.hermitian,
            "involutive": self.involutive,
            "trace": self.trace,
            "max_hermiticity_defect": self.max_hermiticity_defect,
            "max_involution_defect": self.max_involution_defect,
        }


def _phase(angle: float) -> complex:
    # complex(cos, sin) keeps entries bit-identical to cos*sx + sin*sy sums.
    return complex(math.cos(angle), math.sin(angle))


def canonical_pairing(dim: int, n_pairs: int) -> PairingSpec:
    """Pair consecutive modes (0,1), (2,3), ... up to n_pairs pairs.

    On a maximally entangled state the CHSH value depends only on the pair
    count, not on which modes are paired, so this layout is the canonical
    representative of its class.
    """
    if dim < 1:
        raise ValidationError(f"dim must be >= 1, got {dim}")
    if not 0 <= n_pairs <= dim // 2:
        raise ValidationError(f"n_pairs must lie in [0, {dim // 2}] for dim {dim}, got {n_pairs}")
    pairs = tuple((2 * k, 2 * k + 1) for k in range(n_pairs))
    return PairingSpec(dim=dim, pairs=pairs)


def build_operator(spec: PairingSpec, angle: float) -> BellOperator:
    """Assemble the dichotomic operator for a pairing at a given angle.

    Entries: e^{+i angle} at (i, j) and e^{-i angle} at (j, i) for each pair
    (i, j), ones on singleton diagonals, zeros elsewhere.  The trace is the
    singleton count, independent of the angle.
    """
    matrix = np.zeros((spec.dim, spec.dim), dtype=complex)
    phase = _phase(angle)
    for i, j in spec.pairs:
        matrix[i, j] = phase
        matrix[j, i] = phase.conjugate()
    for k in spec.singletons:
        matrix[k, k] = 1.0
    return BellOperator(matrix)


def pseudospin(axis: str, cutoff: int) -> np.ndarray:
    """Truncated pseudospin operator on mode pairs (2n, 2n+1).

    Per pair the blocks are
        x: [[0, 1], [1, 0]]
        y: [[0, i], [-i, 0]]
        z: [[-1, 0], [0, 1]]
    which satisfy [x, y] = 2i z and cyclic permutations exactly.  Note the
    y block carries +i at (2n, 2n+1): this is the sign for which the
    commutation algebra closes with a +2i factor and for which
    cos(a)*x + sin(a)*y reproduces the phase-flip pairing block.
    """
    if cutoff < 2 or cutoff % 2 != 0:
        raise ValidationError(f"cutoff must be a positive even integer >= 2, got {cutoff}")
    even = np.arange(0, cutoff, 2)
    odd = even + 1
    matrix = np.zeros((cutoff, cutoff), dtype=complex)
    if axis == "x":
        matrix[even, odd] = 1.0
        matrix[odd, even] = 1.0
    elif axis == "y":
        matrix[even, odd] = 1.0j
        matrix[odd, even] = -1.0j
    elif axis == "z":
        matrix[even, even] = -1.0
        matrix[odd, odd] = 1.0
    else:
        raise ValidationError(f"axis must be one of 'x', 'y', 'z', got {axis!r}")
    return matrix


def pseudospin_bell(angle: float, cutoff: int) -> BellOperator:
    """Bell operator cos(angle)*s_x + sin(angle)*s_y on a truncated space.

    Equals the direct sum of cutoff/2 copies of the 2x2 phase-flip block,
    i.e. build_operator(canonical_pairing(cutoff, cutoff // 2), angle), and
    is traceless.
    """
    matrix = math.cos(angle) * pseudospin("x", cutoff) + math.sin(angle) * pseudospin("y", cutoff)
    return BellOperator(matrix)


def verify_bell_operator(op: BellOperator) -> VerificationReport:
    """Measure Hermiticity and involution defects in max-entry norm."""
    matrix = op.matrix
    herm_defect = float(np.abs(matrix - matrix.conj().T).max())
    inv_defect = float(np.abs(matrix @ matrix - np.eye(op.dim)).max())
    return VerificationReport(
        hermitian=herm_defect <= HERMITICITY_TOL,
        involutive=inv_defect <= INVOLUTION_TOL,
        trace=op.trace_value,
        max_hermiticity_defect=herm_defect,
        max_involution_defect=inv_defect,
    )


def inequivalence_by_trace(op1: BellOperator, op2: BellOperator) -> str:
    """Trace test for unitary inequivalence.

    Returns "inequivalent" when the traces differ (no unitary can relate
    the operators) and "inconclusive" otherwise: equal traces are necessary
    but not sufficient for equivalence.
    """
    if op1.dim != op2.dim:
        raise ValidationError(f"dimension mismatch: {op1.dim} vs {op2.dim}")
    if abs(op1.trace_value - op2.trace_value) > TRACE_MATCH_TOL:
        return "inequivalent"
    return "inconclusive"

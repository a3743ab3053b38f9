"""Bipartite pure states stored as Schmidt coefficient vectors.

Every state handled here has the form sum_n c_n |n>_a |n>_b with
non-negative coefficients, so it is fully described by the vector c plus,
for truncated infinite families, the probability mass of the discarded
tail.  Truncated states are deliberately *not* renormalized: the tail mass
is carried along explicitly so that any residual against an exact closed
form stays attributable to the truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class SchmidtState:
    """Non-negative Schmidt coefficients of a bipartite pure state.

    Invariant: sum(coeffs**2) + tail_mass == 1 within 1e-12.
    """

    coeffs: np.ndarray
    tail_mass: float = 0.0
    label: str = ""

    def __post_init__(self) -> None:
        coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=float)).copy()
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise ValidationError("coeffs must be a non-empty 1-d vector")
        if np.any(coeffs < 0.0):
            raise ValidationError("Schmidt coefficients must be non-negative")
        if not 0.0 <= self.tail_mass:
            raise ValidationError(f"tail_mass must be non-negative, got {self.tail_mass}")
        total = float(np.sum(coeffs**2)) + self.tail_mass
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(f"state not normalized: sum c^2 + tail_mass = {total!r}")
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self) -> int:
        """Number of retained modes."""
        return self.coeffs.size

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "coeffs": [float(c) for c in self.coeffs],
            "tail_mass": float(self.tail_mass),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SchmidtState":
        return cls(
            coeffs=np.asarray(data["coeffs"], dtype=float),
            tail_mass=float(data.get("tail_mass", 0.0)),
            label=str(data.get("label", "")),
        )


def maximal_state(n_modes: int) -> SchmidtState:
    """Maximally entangled state: every coefficient equals 1/sqrt(N)."""
    if n_modes < 1:
        raise ValidationError(f"number of modes must be >= 1, got {n_modes}")
    coeffs = np.full(n_modes, 1.0 / math.sqrt(n_modes))
    return SchmidtState(coeffs, 0.0, f"maximal(N={n_modes})")


def skewed_state(r: float) -> SchmidtState:
    """Four-mode state (1, 1, 1, sqrt(r)) / sqrt(3 + r).

    The parameter r in (0, 1] tilts the fourth coefficient; r = 1 restores
    the maximally entangled four-mode state.
    """
    if not 0.0 < r <= 1.0:
        raise ValidationError(f"r must lie in (0, 1], got {r}")
    norm = math.sqrt(3.0 + r)
    coeffs = np.array([1.0, 1.0, 1.0, math.sqrt(r)]) / norm
    return SchmidtState(coeffs, 0.0, f"skewed(r={r})")


def squeezed_state(eta: float, cutoff: int = 64) -> SchmidtState:
    """Two-mode squeezed vacuum truncated at an even mode cutoff.

    Coefficients follow the geometric profile c_n = sqrt(1 - eta^2) * eta^n
    for 0 <= n < cutoff.  The discarded probability mass is the closed
    geometric tail eta^(2*cutoff); coefficients are not renormalized.  The
    cutoff must be even so that the all-modes pairing can pair every
    retained mode.
    """
    if not 0.0 <= eta < 1.0:
        raise ValidationError(f"eta must lie in [0, 1), got {eta}")
    if cutoff < 2 or cutoff % 2 != 0:
        raise ValidationError(f"cutoff must be a positive even integer >= 2, got {cutoff}")
    amplitude = math.sqrt(1.0 - eta * eta)
    # cumprod seeded with the amplitude keeps coeffs[n+1] == coeffs[n] * eta exact
    factors = np.concatenate([[amplitude], np.full(cutoff - 1, eta)])
    coeffs = np.cumprod(factors)
    tail_mass = float(eta) ** (2 * cutoff)
    return SchmidtState(coeffs, tail_mass, f"squeezed(eta={eta},cutoff={cutoff})")

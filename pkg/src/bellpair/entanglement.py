"""Reduced-density diagnostics: purity and entanglement entropy.

For a Schmidt state the one-sided reduced density matrix is diagonal with
eigenvalues c_n^2, so only the probability vector is stored.  For the
squeezed family the probabilities are geometric, giving the closed forms

    purity  = (1 - eta^2) / (1 + eta^2)
    entropy = -ln(1 - eta^2) - eta^2 ln(eta^2) / (1 - eta^2),

the entropy growing without bound as eta -> 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from .errors import ValidationError
from .states import NORMALIZATION_TOL, SchmidtState


@dataclass(frozen=True)
class ReducedDensity:
    """Eigenvalues of a reduced density matrix, diagonal in the Schmidt basis."""

    probabilities: np.ndarray
    tail_mass: float = 0.0

    def __post_init__(self) -> None:
        probabilities = np.atleast_1d(np.asarray(self.probabilities, dtype=float)).copy()
        if np.any(probabilities < 0.0):
            raise ValidationError("probabilities must be non-negative")
        total = float(np.sum(probabilities)) + self.tail_mass
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(f"probabilities + tail_mass must sum to 1, got {total!r}")
        probabilities.flags.writeable = False
        object.__setattr__(self, "probabilities", probabilities)


def reduced_density(state: SchmidtState) -> ReducedDensity:
    """Trace out one side: probabilities are the squared Schmidt coefficients."""
    return ReducedDensity(probabilities=state.coeffs**2, tail_mass=state.tail_mass)


def purity(rho: ReducedDensity) -> float:
    """Trace of rho squared, 1 exactly for pure reduced states."""
    return float(np.sum(rho.probabilities**2))


def entropy(rho: ReducedDensity) -> float:
    """Von Neumann entropy -sum p ln p with the 0 ln 0 := 0 convention."""
    p = rho.probabilities[rho.probabilities > 0.0]
    return float(-np.sum(p * np.log(p)))


def purity_closed_squeezed(eta: float) -> float:
    """Closed-form purity (1 - eta^2)/(1 + eta^2) of the squeezed family."""
    _check_eta(eta)
    return (1.0 - eta * eta) / (1.0 + eta * eta)


def entropy_closed_squeezed(eta: float) -> float:
    """Closed-form entanglement entropy of the squeezed family.

    Strictly increasing in eta and divergent as eta -> 1; the domain is
    restricted to [0, 1) rather than assigning special values at 1.
    """
    _check_eta(eta)
    if eta == 0.0:
        return 0.0
    eta_sq = eta * eta
    return -math.log1p(-eta_sq) - eta_sq * math.log(eta_sq) / (1.0 - eta_sq)


def _check_eta(eta: float) -> None:
    if not 0.0 <= eta < 1.0:
        raise ValidationError(f"eta must lie in [0, 1), got {eta}")

"""Angle and squeezing-parameter maximization of the CHSH value.

The closed form is K(angles) * paired_weight + 2 * singleton_weight, so
maximizing over angles means maximizing K.  A coarse grid over [-pi, pi)^4
already contains an exact maximizer of K; golden-section coordinate descent
then polishes the angles.  The grid search also doubles as an independent
confirmation that no angle choice beats the analytic ceiling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .chsh import (
    TSIRELSON_BOUND,
    canonical_angles,
    chsh_squeezed_single_pair,
    paired_weight,
    singleton_weight,
)
from .errors import ValidationError
from .operators import AngleSet, PairingSpec
from .states import SchmidtState

GRID_RESOLUTION = math.pi / 24.0
GRID_POINTS = 48  # covers [-pi, pi) exactly at GRID_RESOLUTION
ANGLE_TOL = 1e-8
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptimResult:
    best_angles: AngleSet
    best_value: float
    evaluations: int
    grid_resolution: float
    refined: bool

    def to_json_dict(self) -> dict:
        return {
            "best_angles": self.best_angles.to_json_list(),
            "best_value": self.best_value,
            "evaluations": self.evaluations,
            "grid_resolution": self.grid_resolution,
            "refined": self.refined,
        }


@dataclass(frozen=True)
class EtaOptimum:
    """Maximizer of a squeezed-state CHSH curve over the squeezing parameter."""

    eta_star: float
    value: float
    boundary_supremum: bool

    def to_json_dict(self) -> dict:
        return {
            "eta_star": self.eta_star,
            "value": self.value,
            "boundary_supremum": self.boundary_supremum,
        }


@dataclass(frozen=True)
class RepresentationSummary:
    """One pairing class of a given dimension: trace and best CHSH."""

    dim: int
    pair_count: int
    trace: float
    max_chsh: float
    angles: AngleSet

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "pair_count": self.pair_count,
            "trace": self.trace,
            "max_chsh": self.max_chsh,
            "angles": self.angles.to_json_list(),
        }


def golden_section_maximize(
    f: Callable[[float], float], lo: float, hi: float, xtol: float = 1e-10
) -> tuple[float, float, int]:
    """Golden-section search for a maximum of f on [lo, hi].

    Returns (x, f(x), evaluations).  Assumes f is unimodal on the bracket;
    on flat stretches the search still terminates at a point of maximal
    sampled value.
    """
    if hi <= lo:
        raise ValidationError(f"empty bracket [{lo}, {hi}]")
    evals = 0
    c = hi - (hi - lo) * _GOLDEN
    d = lo + (hi - lo) * _GOLDEN
    fc, fd = f(c), f(d)
    evals += 2
    while hi - lo > xtol:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - (hi - lo) * _GOLDEN
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + (hi - lo) * _GOLDEN
            fd = f(d)
        evals += 1
    x = 0.5 * (lo + hi)
    return x, f(x), evals + 1


def optimize_angles(state: SchmidtState, spec: PairingSpec) -> OptimResult:
    """Maximize the CHSH closed form over all four angles.

    Coarse grid over [-pi, pi)^4 at resolution pi/24 (which contains the
    canonical angles exactly), then golden-section coordinate descent down
    to angle tolerance 1e-8.  Ties on the grid break to the first maximum
    in lexicographic (alpha1, alpha2, beta1, beta2) order, so the reported
    angles are deterministic.
    """
    pw = paired_weight(state, spec)
    sw = singleton_weight(state, spec)

    grid = -math.pi + GRID_RESOLUTION * np.arange(GRID_POINTS)
    a1 = grid[:, None, None, None]
    a2 = grid[None, :, None, None]
    b1 = grid[None, None, :, None]
    b2 = grid[None, None, None, :]
    values = np.cos(a1 + b1) + np.cos(a2 + b1) + np.cos(a1 + b2) - np.cos(a2 + b2)
    values *= pw
    values += 2.0 * sw
    flat_index = int(np.argmax(values))  # first maximum in C order == lexicographic
    indices = np.unravel_index(flat_index, values.shape)
    best = float(values.flat[flat_index])
    angles = [float(grid[k]) for k in indices]
    evaluations = values.size
    del values

    def value_at(point: list[float]) -> float:
        k = (
            math.cos(point[0] + point[2])
            + math.cos(point[1] + point[2])
            + math.cos(point[0] + point[3])
            - math.cos(point[1] + point[3])
        )
        return k * pw + 2.0 * sw

    for _ in range(64):
        value_before_sweep = best
        for axis in range(4):
            def slice_fn(t: float, axis: int = axis) -> float:
                trial = list(angles)
                trial[axis] = t
                return value_at(trial)

            x, fx, used = golden_section_maximize(
                slice_fn, angles[axis] - GRID_RESOLUTION, angles[axis] + GRID_RESOLUTION, xtol=ANGLE_TOL
            )
            evaluations += used
            if fx > best:
                best = fx
                angles[axis] = x
        if best - value_before_sweep < 1e-13:
            break

    return OptimResult(
        best_angles=AngleSet(*angles),
        best_value=best,
        evaluations=evaluations,
        grid_resolution=GRID_RESOLUTION,
        refined=True,
    )


def optimize_eta(mode: str) -> EtaOptimum:
    """Maximize a squeezed-state CHSH closed form over eta in (0, 1).

    single_pair has an interior maximum found by golden-section search;
    all_pairs increases monotonically, so the supremum 2*sqrt(2) sits at
    the open boundary eta -> 1 and is flagged as such.
    """
    if mode == "single_pair":
        eta, value, _ = golden_section_maximize(chsh_squeezed_single_pair, 1e-12, 1.0 - 1e-12, xtol=1e-10)
        return EtaOptimum(eta_star=eta, value=value, boundary_supremum=False)
    if mode == "all_pairs":
        return EtaOptimum(eta_star=1.0, value=TSIRELSON_BOUND, boundary_supremum=True)
    raise ValidationError(f"mode must be 'single_pair' or 'all_pairs', got {mode!r}")


def enumerate_representations(dim: int) -> list[RepresentationSummary]:
    """All pairing classes of one dimension with their traces and best CHSH.

    One entry per pair count p in [0, dim // 2] on the maximal state.  The
    traces dim - 2p are pairwise distinct, so all classes are mutually
    unitarily inequivalent by the trace test.  Best CHSH per class is
    (2p * 2*sqrt(2) + 2(dim - 2p)) / dim, strictly increasing in p.
    """
    if dim < 2:
        raise ValidationError(f"dim must be >= 2, got {dim}")
    angles = canonical_angles()
    summaries = []
    for p in range(dim // 2 + 1):
        max_chsh = (2.0 * p * TSIRELSON_BOUND + 2.0 * (dim - 2 * p)) / dim
        summaries.append(
            RepresentationSummary(
                dim=dim, pair_count=p, trace=float(dim - 2 * p), max_chsh=max_chsh, angles=angles
            )
        )
    return summaries

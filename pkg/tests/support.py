"""Shared helpers for the test suite: random cases and oracle-side searches."""

from __future__ import annotations

import math

import numpy as np

from bellpair import PairingSpec, SchmidtState, build_operator, canonical_pairing, maximal_state

ANGLE_GRID = -math.pi + (math.pi / 24.0) * np.arange(48)


def random_state(rng: np.random.Generator, dim: int) -> SchmidtState:
    coeffs = np.abs(rng.standard_normal(dim)) + 1e-3
    coeffs /= math.sqrt(float(np.sum(coeffs**2)))
    return SchmidtState(coeffs, 0.0, "random")


def random_pairing(rng: np.random.Generator, dim: int) -> PairingSpec:
    n_pairs = int(rng.integers(0, dim // 2 + 1))
    modes = rng.permutation(dim)[: 2 * n_pairs]
    pairs = tuple((int(modes[2 * k]), int(modes[2 * k + 1])) for k in range(n_pairs))
    return PairingSpec(dim=dim, pairs=pairs)


def oracle_angle_grid_chsh(state: SchmidtState, spec: PairingSpec) -> np.ndarray:
    """CHSH values on the full 48^4 angle grid, every entry oracle-derived.

    Correlations E[a, b] = sum_mn c_m c_n A(grid[a])[m,n] B(grid[b])[m,n]
    are contracted once per angle pair; the CHSH combination is then formed
    by broadcasting, so no closed-form shortcut enters.
    """
    ops = np.stack([build_operator(spec, float(g)).matrix for g in ANGLE_GRID])
    c = state.coeffs
    corr = np.einsum("amn,bmn,m,n->ab", ops, ops, c, c)
    assert float(np.abs(corr.imag).max()) < 1e-10
    e = corr.real
    return e[:, None, :, None] + e[None, :, :, None] + e[:, None, None, :] - e[None, :, None, :]


def oracle_grid_max_over_pairings(dim: int) -> float:
    """Best oracle-grid CHSH on the maximal state over all pair counts."""
    state = maximal_state(dim)
    best = -math.inf
    for n_pairs in range(dim // 2 + 1):
        spec = canonical_pairing(dim, n_pairs)
        best = max(best, float(oracle_angle_grid_chsh(state, spec).max()))
    return best

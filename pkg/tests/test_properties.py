"""Property-based invariants over random states, pairings, and angles."""

import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from bellpair import (
    TSIRELSON_BOUND,
    AngleSet,
    PairingSpec,
    SchmidtState,
    build_operator,
    chsh_value,
    correlation_closed,
    correlation_oracle,
    maximal_state,
    canonical_pairing,
    verify_bell_operator,
)

angles_st = st.builds(
    AngleSet,
    *(st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False) for _ in range(4)),
)


@st.composite
def state_and_pairing(draw):
    dim = draw(st.integers(min_value=1, max_value=8))
    raw = draw(
        st.lists(
            st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
            min_size=dim,
            max_size=dim,
        )
    )
    coeffs = np.asarray(raw) + 1e-3
    coeffs /= math.sqrt(float(np.sum(coeffs**2)))
    state = SchmidtState(coeffs)

    n_pairs = draw(st.integers(min_value=0, max_value=dim // 2))
    order = draw(st.permutations(range(dim)))
    pairs = tuple((order[2 * k], order[2 * k + 1]) for k in range(n_pairs))
    return state, PairingSpec(dim=dim, pairs=pairs)


@settings(max_examples=150, deadline=None)
@given(state_and_pairing(), st.floats(min_value=-10.0, max_value=10.0, allow_nan=False))
def test_built_operators_are_dichotomic(case, angle):
    _, spec = case
    report = verify_bell_operator(build_operator(spec, angle))
    assert report.max_hermiticity_defect < 1e-12
    assert report.max_involution_defect < 1e-12
    assert report.trace == float(spec.dim - 2 * spec.pair_count)


@settings(max_examples=150, deadline=None)
@given(state_and_pairing(), angles_st)
def test_chsh_never_exceeds_quantum_ceiling(case, angles):
    state, spec = case
    report = chsh_value(state, spec, angles, "closed_form")
    assert abs(report.value) <= TSIRELSON_BOUND + 1e-9


@settings(max_examples=150, deadline=None)
@given(state_and_pairing(), angles_st)
def test_oracle_and_closed_form_agree(case, angles):
    state, spec = case
    oracle = chsh_value(state, spec, angles, "oracle")
    closed = chsh_value(state, spec, angles, "closed_form")
    assert abs(oracle.value - closed.value) < 1e-10


@settings(max_examples=150, deadline=None)
@given(state_and_pairing())
def test_zero_angles_respect_classical_bound(case):
    state, spec = case
    report = chsh_value(state, spec, AngleSet(0, 0, 0, 0), "oracle")
    assert report.value <= 2.0 + 1e-12
    # equality exactly when every pair has equal coefficients
    if all(abs(state.coeffs[i] - state.coeffs[j]) < 1e-12 for i, j in spec.pairs):
        assert report.value > 2.0 - 1e-9


@settings(max_examples=100, deadline=None)
@given(state_and_pairing(), angles_st, st.floats(min_value=-3.0, max_value=3.0, allow_nan=False))
def test_correlation_closed_matches_oracle_pointwise(case, angles, extra):
    state, spec = case
    a = build_operator(spec, angles.alpha1 + extra)
    b = build_operator(spec, angles.beta1)
    oracle = correlation_oracle(state, a, b)
    closed = correlation_closed(state, spec, angles.alpha1 + extra + angles.beta1)
    assert abs(oracle - closed) < 1e-10 + state.tail_mass


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=2, max_value=9),
    st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False),
)
def test_trace_counts_singletons(dim, angle):
    for n_pairs in range(dim // 2 + 1):
        op = build_operator(canonical_pairing(dim, n_pairs), angle)
        assert op.trace_value == float(dim - 2 * n_pairs)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=8))
def test_chsh_monotone_in_pair_count_on_maximal_state(dim):
    from bellpair import canonical_angles

    state = maximal_state(dim)
    values = [
        chsh_value(state, canonical_pairing(dim, p), canonical_angles(), "closed_form").value
        for p in range(dim // 2 + 1)
    ]
    assert all(b > a + 1e-12 for a, b in zip(values, values[1:]))

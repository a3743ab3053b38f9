import cmath
import math

import numpy as np
import pytest
from scipy.linalg import block_diag

from bellpair import (
    BellOperator,
    PairingSpec,
    ValidationError,
    build_operator,
    canonical_pairing,
    inequivalence_by_trace,
    pseudospin,
    pseudospin_bell,
    verify_bell_operator,
)

ALPHA = 0.7312


def phase_flip_block(angle: float) -> np.ndarray:
    return np.array(
        [[0.0, cmath.exp(1j * angle)], [cmath.exp(-1j * angle), 0.0]], dtype=complex
    )


# ---------------------------------------------------------------- pairings


def test_canonical_pairing_full():
    spec = canonical_pairing(4, 2)
    assert spec.pairs == ((0, 1), (2, 3))
    assert spec.singletons == ()


def test_canonical_pairing_partial():
    spec = canonical_pairing(6, 1)
    assert spec.pairs == ((0, 1),)
    assert spec.singletons == (2, 3, 4, 5)


def test_canonical_pairing_odd_dimension():
    spec = canonical_pairing(5, 2)
    assert spec.pairs == ((0, 1), (2, 3))
    assert spec.singletons == (4,)


def test_canonical_pairing_rejects_too_many_pairs():
    with pytest.raises(ValidationError):
        canonical_pairing(5, 3)


@pytest.mark.parametrize(
    "pairs",
    [((0, 0),), ((0, 4),), ((0, 1), (1, 2)), ((-1, 0),)],
    ids=["self-pair", "out-of-range", "reused-mode", "negative"],
)
def test_pairing_spec_rejects_invalid_pairs(pairs):
    with pytest.raises(ValidationError):
        PairingSpec(dim=4, pairs=pairs)


def test_pairing_spec_json_round_trip():
    spec = PairingSpec(dim=6, pairs=((1, 4), (2, 3)))
    clone = PairingSpec.from_json_dict(spec.to_json_dict())
    assert clone == spec


# ---------------------------------------------------------------- build_operator


def test_build_operator_single_pair_matrix():
    # one pair (1, 2) on four modes: identity on modes 0 and 3
    op = build_operator(PairingSpec(4, ((1, 2),)), ALPHA)
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = expected[3, 3] = 1.0
    expected[1, 2] = cmath.exp(1j * ALPHA)
    expected[2, 1] = cmath.exp(-1j * ALPHA)
    assert np.allclose(op.matrix, expected, atol=1e-15)
    assert op.trace_value == 2.0


def test_build_operator_two_pair_matrix():
    op = build_operator(canonical_pairing(4, 2), ALPHA)
    expected = block_diag(phase_flip_block(ALPHA), phase_flip_block(ALPHA))
    assert np.allclose(op.matrix, expected, atol=1e-15)
    assert op.trace_value == 0.0


def test_build_operator_zero_angle_is_pauli_x():
    op = build_operator(canonical_pairing(2, 1), 0.0)
    assert np.array_equal(op.matrix, np.array([[0, 1], [1, 0]], dtype=complex))


@pytest.mark.parametrize("dim,n_pairs", [(2, 1), (4, 1), (4, 2), (5, 2), (6, 3), (7, 0)])
def test_build_operator_hermitian_involutive(dim, n_pairs):
    op = build_operator(canonical_pairing(dim, n_pairs), 1.234)
    report = verify_bell_operator(op)
    assert report.hermitian and report.involutive
    assert report.max_hermiticity_defect == 0.0
    assert report.max_involution_defect <= 1e-12
    assert report.trace == float(dim - 2 * n_pairs)


def test_build_operator_trace_is_angle_independent():
    spec = PairingSpec(6, ((0, 3), (1, 5)))
    traces = {build_operator(spec, a).trace_value for a in (-2.0, 0.0, 0.5, 3.0)}
    assert traces == {2.0}


# ---------------------------------------------------------------- pseudospin


def test_pseudospin_z_smallest_cutoff():
    assert np.array_equal(pseudospin("z", 2), np.diag([-1.0 + 0j, 1.0 + 0j]))


def test_pseudospin_x_smallest_cutoff():
    assert np.array_equal(pseudospin("x", 2), np.array([[0, 1], [1, 0]], dtype=complex))


def test_pseudospin_y_block_structure():
    # two identical Hermitian blocks; +i sits at the (2n, 2n+1) entries so
    # that the commutation algebra closes with a +2i factor
    sy = pseudospin("y", 4)
    block = np.array([[0, 1j], [-1j, 0]])
    assert np.array_equal(sy, block_diag(block, block))
    assert np.abs(sy - sy.conj().T).max() == 0.0


@pytest.mark.parametrize("cutoff", [2, 4, 8, 64])
def test_pseudospin_commutation_algebra(cutoff):
    sx, sy, sz = (pseudospin(axis, cutoff) for axis in "xyz")
    assert np.abs(sx @ sy - sy @ sx - 2j * sz).max() <= 1e-12
    assert np.abs(sy @ sz - sz @ sy - 2j * sx).max() <= 1e-12
    assert np.abs(sz @ sx - sx @ sz - 2j * sy).max() <= 1e-12


def test_pseudospin_rejects_odd_cutoff():
    with pytest.raises(ValidationError):
        pseudospin("x", 3)


def test_pseudospin_rejects_unknown_axis():
    with pytest.raises(ValidationError):
        pseudospin("w", 4)


def test_pseudospin_bell_zero_angle_is_pauli_x():
    op = pseudospin_bell(0.0, 2)
    assert np.array_equal(op.matrix, np.array([[0, 1], [1, 0]], dtype=complex))


def test_pseudospin_bell_is_direct_sum_of_phase_flip_blocks():
    for cutoff in (2, 4, 8, 16):
        op = pseudospin_bell(ALPHA, cutoff)
        block = np.array(
            [
                [0.0, math.cos(ALPHA) + 1j * math.sin(ALPHA)],
                [math.cos(ALPHA) - 1j * math.sin(ALPHA), 0.0],
            ]
        )
        expected = block_diag(*([block] * (cutoff // 2)))
        assert np.array_equal(op.matrix, expected)


def test_pseudospin_bell_matches_fully_paired_operator():
    for angle in (-1.9, 0.0, 0.37, 2.6):
        direct = pseudospin_bell(angle, 8)
        paired = build_operator(canonical_pairing(8, 4), angle)
        assert np.array_equal(direct.matrix, paired.matrix)


@pytest.mark.parametrize("cutoff", [2, 4, 8, 64])
def test_pseudospin_bell_traceless(cutoff):
    assert pseudospin_bell(0.9, cutoff).trace_value == 0.0


def test_pseudospin_bell_rejects_odd_cutoff():
    with pytest.raises(ValidationError):
        pseudospin_bell(0.1, 5)


# ---------------------------------------------------------------- verification


def test_verify_identity_matrix():
    report = verify_bell_operator(BellOperator(np.eye(3, dtype=complex)))
    assert report.hermitian and report.involutive
    assert report.trace == 3.0


def test_verify_flags_non_involutive():
    report = verify_bell_operator(BellOperator(np.diag([1.0, 2.0]).astype(complex)))
    assert report.hermitian
    assert not report.involutive
    assert report.max_involution_defect == 3.0


def test_verify_flags_non_hermitian():
    matrix = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    report = verify_bell_operator(BellOperator(matrix))
    assert not report.hermitian


# ---------------------------------------------------------------- trace test


def test_four_dim_representations_inequivalent():
    rep1 = build_operator(PairingSpec(4, ((1, 2),)), 0.3)
    rep2 = build_operator(canonical_pairing(4, 2), 0.3)
    assert (rep1.trace_value, rep2.trace_value) == (2.0, 0.0)
    assert inequivalence_by_trace(rep1, rep2) == "inequivalent"


def test_identical_operators_inconclusive():
    op = build_operator(canonical_pairing(4, 1), 0.3)
    assert inequivalence_by_trace(op, op) == "inconclusive"


def test_six_dim_pair_counts_inequivalent():
    one = build_operator(canonical_pairing(6, 1), 0.5)
    two = build_operator(canonical_pairing(6, 2), 0.5)
    assert (one.trace_value, two.trace_value) == (4.0, 2.0)
    assert inequivalence_by_trace(one, two) == "inequivalent"


def test_inequivalence_rejects_dimension_mismatch():
    with pytest.raises(ValidationError):
        inequivalence_by_trace(
            build_operator(canonical_pairing(4, 1), 0.1),
            build_operator(canonical_pairing(6, 1), 0.1),
        )


def test_same_pair_count_different_layout_is_inconclusive():
    layout_a = build_operator(PairingSpec(6, ((0, 1),)), 0.2)
    layout_b = build_operator(PairingSpec(6, ((2, 5),)), 0.2)
    assert inequivalence_by_trace(layout_a, layout_b) == "inconclusive"


# ---------------------------------------------------------------- serialization


def test_operator_json_round_trip():
    op = build_operator(canonical_pairing(4, 2), ALPHA)
    data = op.to_json_dict()
    assert data["dim"] == 4
    assert len(data["entries"]) == 16
    clone = BellOperator.from_json_dict(data)
    assert np.array_equal(clone.matrix, op.matrix)


def test_operator_matrix_immutable():
    op = build_operator(canonical_pairing(2, 1), 0.4)
    with pytest.raises(ValueError):
        op.matrix[0, 0] = 5.0

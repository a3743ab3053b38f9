"""How many inequivalent Bell-operator representations fit in one dimension?

Walks through the four- and six-mode maximally entangled states: builds
every pairing class, shows its matrix shape, its trace, and the CHSH value
it reaches at the optimal angles.  Different pair counts mean different
traces, so no unitary can map one class onto another, yet every class with
at least one pair violates the classical bound.
"""

import numpy as np

from bellpair import (
    TSIRELSON_BOUND,
    build_operator,
    canonical_angles,
    canonical_pairing,
    chsh_bounds,
    chsh_value,
    enumerate_representations,
    inequivalence_by_trace,
    maximal_state,
)

np.set_printoptions(precision=3, suppress=True, linewidth=120)

print("=" * 72)
print("Four modes: two inequivalent ways to act on the same state")
print("=" * 72)

state = maximal_state(4)
angles = canonical_angles()
one_pair = canonical_pairing(4, 1)
two_pairs = canonical_pairing(4, 2)

op1 = build_operator(one_pair, 0.5)
op2 = build_operator(two_pairs, 0.5)
print("\none pair + two identity modes (trace %.0f):" % op1.trace_value)
print(op1.matrix)
print("\nfully paired (trace %.0f):" % op2.trace_value)
print(op2.matrix)
print("\ntrace test:", inequivalence_by_trace(op1, op2))

for label, spec in (("one pair ", one_pair), ("two pairs", two_pairs)):
    report = chsh_value(state, spec, angles, "oracle")
    print(f"CHSH with {label}: {report.value:.12f}  (violated: {report.violated})")
print(f"reference points: 1 + sqrt(2) = {1 + np.sqrt(2):.12f}, 2 sqrt(2) = {TSIRELSON_BOUND:.12f}")

print()
print("=" * 72)
print("Six modes: a three-step ladder of violations")
print("=" * 72)
print(f"\n{'pairs':>5} {'trace':>6} {'max CHSH':>14}")
for summary in enumerate_representations(6):
    print(f"{summary.pair_count:>5} {summary.trace:>6.0f} {summary.max_chsh:>14.6f}")

print()
print("=" * 72)
print("Every dimension: the reachable violation window")
print("=" * 72)
print(f"\n{'dim':>4} {'parity':>7} {'one pair':>12} {'best':>12} {'hits ceiling':>14}")
for dim in range(3, 11):
    interval = chsh_bounds(dim)
    hits = "yes" if abs(interval.upper - TSIRELSON_BOUND) < 1e-12 else "no"
    print(f"{dim:>4} {interval.parity:>7} {interval.lower:>12.6f} {interval.upper:>12.6f} {hits:>14}")
print("\nOdd dimensions always leave one mode unpaired, so the ceiling stays")
print("strictly below 2 sqrt(2); even dimensions reach it with a full pairing.")

#pragma once

#include "stateprep/circuit.hpp"
#include "stateprep/exponents.hpp"

namespace stateprep {

/// Rotation angle used at position m of the amplitude-passing cascade:
/// 2*arccos(sqrt(1/m)), so that the rotated qubit keeps amplitude
/// sqrt(1/m) on |0> and passes the rest on.
[[nodiscard]] double w_cascade_angle(int m);

/// Cascade of controlled rotations preparing the W state on n qubits: a
/// rotation on qubit 0, controlled rotations down the line, a CNOT onto the
/// last qubit, a CNOT chain back up and a final X on qubit 0. Controlled
/// rotations are left intact; feed the result through
/// decompose_controlled_rotations() for the two-qubit-gate version.
[[nodiscard]] Circuit build_w_cascade(int n);

/// Closed-form exponent count of the scheduled, decomposed cascade.
/// Matches count_exponents(schedule(decompose_controlled_rotations(
/// build_w_cascade(n)))) exactly; the schedule has depth 5n-7.
[[nodiscard]] ExponentVector w_cascade_exponents(int n);

/// Probabilistic approximate preparation: every data qubit is rotated by
/// RY(arccos(sqrt((n-1)/n))), the joint parity is folded into one extra
/// qubit through a parity gadget and measured. Odd parity (bit value 1 in
/// the last classical bit) leaves an odd-Hamming-weight superposition
/// dominated by weight-one strings.
[[nodiscard]] Circuit build_w_parity_filter(int n);

/// Probability that the parity filter accepts: (1 - ((n-1)/n)^(n/2)) / 2.
[[nodiscard]] double w_parity_filter_acceptance(int n);

/// Fidelity of the accepted state with the W state:
/// n * c^(2n-2) * (1-c^2) / acceptance, with c = cos of half the data
/// rotation angle.
[[nodiscard]] double w_parity_filter_fidelity(int n);

}  // namespace stateprep

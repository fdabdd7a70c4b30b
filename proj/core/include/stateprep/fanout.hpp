#pragma once

#include "stateprep/circuit.hpp"
#include "stateprep/exponents.hpp"

namespace stateprep {

/// Constant-depth broadcast of qubit 0 onto qubits 1..arity-1.
///
/// Layout: qubit 0 is the source, qubits 1..arity-1 the copies, followed by
/// `arity` carrier qubits entangled into a measured cat state and arity-1
/// link qubits. The carriers pick up the source through one CNOT, a
/// measurement round fixes X corrections, CNOTs drop the value onto the
/// copies, and a second measurement round fixes a Z correction on the
/// source. Total 3*arity - 1 qubits and 3*arity - 1 classical bits.
[[nodiscard]] Circuit build_fanout(int arity);

/// Constant-depth parity accumulation: qubit 0 picks up the XOR of qubits
/// 1..arity-1, which are preserved. Same layout and helper budget as
/// build_fanout; the broadcast is conjugated by Hadamards on all data
/// qubits.
[[nodiscard]] Circuit build_parity(int arity);

/// Closed-form exponent counts for the scheduled circuits above. These
/// match count_exponents(schedule(...)) exactly, layer by layer.
[[nodiscard]] ExponentVector fanout_circuit_exponents(int arity);
[[nodiscard]] ExponentVector parity_circuit_exponents(int arity);

}  // namespace stateprep

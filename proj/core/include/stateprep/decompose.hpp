#pragma once

#include "stateprep/circuit.hpp"

namespace stateprep {

/// Rewrites every controlled rotation as three single-qubit gates on the
/// target interleaved with two CNOT gates, leaving all other operations in
/// place. The replacement implements the same two-qubit unitary; the first
/// single-qubit gate is an identity kept so that every controlled rotation
/// costs the same gate pattern.
[[nodiscard]] Circuit decompose_controlled_rotations(const Circuit& c);

}  // namespace stateprep

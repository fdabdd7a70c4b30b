#pragma once

#include <vector>

#include "stateprep/circuit.hpp"

namespace stateprep {

/// Number of output bits the routine produces for the given input width.
[[nodiscard]] int classical_output_width(ClassicalFn fn, int num_inputs);

/// Evaluates a feedforward routine on measurement bits. All routines are
/// pure functions of their inputs.
[[nodiscard]] std::vector<int> eval_classical(ClassicalFn fn, const std::vector<int>& inputs);

}  // namespace stateprep

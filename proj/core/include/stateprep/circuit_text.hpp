#pragma once

#include <string>

#include "stateprep/circuit.hpp"

namespace stateprep {

/// Serializes a circuit to the line-oriented text format:
///
///   QUBITS 5
///   CLBITS 3
///   H 3
///   RY 1 1.5707963267948966
///   G1 2 <eight floats, row-major re/im pairs>
///   CNOT 2 4
///   CRY 0 1 0.5
///   M 4 -> c1 consume
///   CC PARITY c0 c1 -> c2
///   COND c1 X 7
///
/// Floats use enough digits to round-trip exactly. Blank lines and lines
/// starting with '#' are ignored by the parser.
[[nodiscard]] std::string to_text(const Circuit& c);

/// Parses the text format. Throws std::invalid_argument on malformed input;
/// the result is validated before it is returned.
[[nodiscard]] Circuit from_text(const std::string& text);

}  // namespace stateprep

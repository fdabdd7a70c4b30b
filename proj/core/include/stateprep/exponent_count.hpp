#pragma once

#include "stateprep/exponents.hpp"
#include "stateprep/schedule.hpp"

namespace stateprep {

struct CountOptions {
  /// Conditional single-qubit layers charge floor(targets/2) gates and leave
  /// the remaining targets idle, matching the worst case over measurement
  /// outcomes when the correction may be complemented as a whole. When
  /// false, every target is charged as an applied gate.
  bool worst_case_conditionals = true;
};

/// Counts error-term exponents layer by layer:
///  - single-qubit layers add one p_s per gate and one p_is per idle qubit,
///  - two-qubit layers add one p_d per gate pair and one p_id per idle qubit,
///  - measurement layers add one p_m per measured qubit and one p_im per
///    idle qubit,
///  - classical layers add one p_ic per live qubit,
///  - conditional single layers follow the CountOptions rule above.
[[nodiscard]] ExponentVector count_exponents(const Schedule& s, const CountOptions& options = {});

}  // namespace stateprep

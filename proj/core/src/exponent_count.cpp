#include "stateprep/exponent_count.hpp"

namespace stateprep {

ExponentVector count_exponents(const Schedule& s, const CountOptions& options) {
  ExponentVector e;
  for (const Layer& layer : s.layers) {
    const auto active = static_cast<std::int64_t>(layer.active.size());
    const auto idle = static_cast<std::int64_t>(layer.idle.size());
    switch (layer.cls) {
      case LayerClass::Single:
        if (layer.conditional && options.worst_case_conditionals) {
          const std::int64_t applied = active / 2;
          e.s += applied;
          e.is += idle + (active - applied);
        } else {
          e.s += active;
          e.is += idle;
        }
        break;
      case LayerClass::Double:
        e.d += static_cast<std::int64_t>(layer.ops.size());
        e.id += idle;
        break;
      case LayerClass::Measure:
        e.m += active;
        e.im += idle;
        break;
      case LayerClass::Classical:
        e.ic += idle;
        break;
    }
  }
  return e;
}

}  // namespace stateprep

#pragma once

#include <cstddef>
#include <vector>

#include "stateprep/circuit.hpp"

namespace stateprep {

enum class LayerClass { Single, Double, Measure, Classical };

/// One homogeneous time step. All operations in a layer belong to the same
/// class, touch disjoint qubits and have every dependency satisfied by
/// earlier layers.
struct Layer {
  LayerClass cls = LayerClass::Single;
  /// Single layers only: true when the layer consists of classically
  /// controlled gates. Plain and controlled single-qubit gates never share a
  /// layer.
  bool conditional = false;
  std::vector<std::size_t> ops;  ///< indices into the scheduled circuit
  std::vector<int> active;       ///< qubits acted on (measured qubits for Measure layers)
  std::vector<int> idle;         ///< live qubits not acted on; for Classical layers, all live qubits
};

struct ScheduleOptions {
  /// Upper bound on two-qubit gates per layer; 0 means unlimited.
  int max_parallel_2q = 0;
};

struct Schedule {
  Circuit circuit;
  std::vector<Layer> layers;

  [[nodiscard]] int depth() const { return static_cast<int>(layers.size()); }
};

/// Greedy as-soon-as-possible scheduling into homogeneous layers.
///
/// Iteratively collects the operations whose dependencies are all scheduled,
/// groups them by class, and emits one layer of the highest-priority
/// nonempty class in the order single, conditional single, two-qubit,
/// measurement, classical. Dependencies are: program order between
/// operations sharing a qubit, measurement before any read of its bit, and
/// reads of a bit before a later write. Qubits consumed by a measurement
/// leave the live set after that layer.
[[nodiscard]] Schedule schedule(const Circuit& c, const ScheduleOptions& options = {});

}  // namespace stateprep

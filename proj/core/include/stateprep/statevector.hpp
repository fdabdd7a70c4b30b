#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "stateprep/circuit.hpp"

namespace stateprep {

using Amplitude = std::complex<double>;
using Matrix4 = std::array<Amplitude, 16>;  // row-major on (high bit, low bit) pairs

/// Pure state over up to 63 qubits, stored as a map from basis index to
/// amplitude. Bit q of the key is qubit q. Starts in |0...0>.
class SparseState {
 public:
  explicit SparseState(int num_qubits);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }

  void apply_1q(const Matrix2& m, int q);
  /// Applies m to the target on the control = 1 subspace.
  void apply_controlled(const Matrix2& m, int control, int target);
  void apply_cnot(int control, int target);
  /// Applies a general two-qubit unitary; the row/column index is
  /// 2*bit(a) + bit(b).
  void apply_2q(const Matrix4& m, int a, int b);

  [[nodiscard]] double probability_one(int q) const;
  /// Collapses qubit q to the given outcome and renormalizes. The outcome
  /// probability must be positive.
  void project(int q, int outcome);
  /// Collapse plus reset to |0>, used when a measurement consumes the qubit.
  void project_and_clear(int q, int outcome);

  [[nodiscard]] double norm_sq() const;
  [[nodiscard]] Amplitude amplitude(std::uint64_t basis) const;
  void set_amplitude(std::uint64_t basis, Amplitude a);

  [[nodiscard]] Amplitude inner(const SparseState& other) const;

  /// Basis states with |amplitude|^2 above the cutoff, sorted by index.
  [[nodiscard]] std::vector<std::pair<std::uint64_t, Amplitude>> sorted_entries(
      double min_prob = 0.0) const;

  [[nodiscard]] std::size_t size() const { return amps_.size(); }

 private:
  int num_qubits_;
  std::unordered_map<std::uint64_t, Amplitude> amps_;
};

/// |<a|b>|^2.
[[nodiscard]] double fidelity(const SparseState& a, const SparseState& b);

/// (|0...0> + |1...1>)/sqrt(2) on qubits [0, n), |0> elsewhere.
[[nodiscard]] SparseState ghz_state(int n, int total_qubits);

/// Uniform superposition of the weight-one basis states on qubits [0, n),
/// |0> elsewhere.
[[nodiscard]] SparseState w_state(int n, int total_qubits);

}  // namespace stateprep

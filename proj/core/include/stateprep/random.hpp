#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "stateprep/statevector.hpp"

namespace stateprep {

/// One step of the splitmix64 generator; advances the state and returns the
/// mixed output.
[[nodiscard]] std::uint64_t splitmix64_next(std::uint64_t& state);

/// Decorrelated per-stream seed derived from a base seed and a stream index.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Deterministic random stream: uniforms in [0,1) with 53-bit resolution and
/// standard normals via Box-Muller.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  [[nodiscard]] double uniform();
  [[nodiscard]] double normal();
  /// Entry of a standard complex Gaussian matrix: independent N(0,1) real
  /// and imaginary parts.
  [[nodiscard]] std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// Haar-distributed single-qubit unitary: QR of a complex Ginibre matrix
/// with the R-diagonal phases absorbed into Q.
[[nodiscard]] Matrix2 haar_random_1q(RngStream& rng);

/// Haar-distributed two-qubit unitary, row-major over the 2*bit(a)+bit(b)
/// basis used by SparseState::apply_2q.
[[nodiscard]] Matrix4 haar_random_2q(RngStream& rng);

}  // namespace stateprep

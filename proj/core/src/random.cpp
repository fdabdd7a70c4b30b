#include "stateprep/random.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace stateprep {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t state = base;
  (void)splitmix64_next(state);
  state ^= 0xd1b54a32d192ed03ULL * (index + 1);
  return splitmix64_next(state);
}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  // Box-Muller; 1 - u keeps the logarithm away from zero.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(angle);
  has_cached_ = true;
  return r * std::cos(angle);
}

std::complex<double> RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

namespace {

template <int Dim>
Eigen::Matrix<std::complex<double>, Dim, Dim> haar_unitary(RngStream& rng) {
  Eigen::Matrix<std::complex<double>, Dim, Dim> g;
  for (int r = 0; r < Dim; ++r) {
    for (int c = 0; c < Dim; ++c) g(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<decltype(g)> qr(g);
  Eigen::Matrix<std::complex<double>, Dim, Dim> q = qr.householderQ();
  const auto& packed = qr.matrixQR();
  for (int c = 0; c < Dim; ++c) {
    const std::complex<double> d = packed(c, c);
    const double mag = std::abs(d);
    const std::complex<double> phase = mag > 0.0 ? d / mag : std::complex<double>{1.0, 0.0};
    q.col(c) *= phase;
  }
  return q;
}

}  // namespace

Matrix2 haar_random_1q(RngStream& rng) {
  const auto u = haar_unitary<2>(rng);
  Matrix2 m;
  m.m00 = u(0, 0);
  m.m01 = u(0, 1);
  m.m10 = u(1, 0);
  m.m11 = u(1, 1);
  return m;
}

Matrix4 haar_random_2q(RngStream& rng) {
  const auto u = haar_unitary<4>(rng);
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[static_cast<std::size_t>(r * 4 + c)] = u(r, c);
  }
  return m;
}

}  // namespace stateprep

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>

#include "stateprep/random.hpp"

using namespace stateprep;

namespace {

double unitarity_defect_1q(const Matrix2& u) {
  // Largest entry of U U^dagger - I in magnitude.
  const std::complex<double> r00 =
      u.m00 * std::conj(u.m00) + u.m01 * std::conj(u.m01) - 1.0;
  const std::complex<double> r01 = u.m00 * std::conj(u.m10) + u.m01 * std::conj(u.m11);
  const std::complex<double> r11 =
      u.m10 * std::conj(u.m10) + u.m11 * std::conj(u.m11) - 1.0;
  return std::max({std::abs(r00), std::abs(r01), std::abs(r11)});
}

double unitarity_defect_2q(const Matrix4& u) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::complex<double> dot = 0.0;
      for (int k = 0; k < 4; ++k) dot += u[r * 4 + k] * std::conj(u[c * 4 + k]);
      if (r == c) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("streams are deterministic in the seed") {
  RngStream a(42);
  RngStream b(42);
  RngStream c(43);
  bool all_equal = true;
  bool any_differs = false;
  for (int i = 0; i < 100; ++i) {
    const double va = a.uniform();
    all_equal = all_equal && va == b.uniform();
    any_differs = any_differs || va != c.uniform();
  }
  CHECK(all_equal);
  CHECK(any_differs);
}

TEST_CASE("derived seeds are decorrelated and reproducible") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(7, i));
  CHECK(seen.size() == 1000);
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
  CHECK(derive_seed(7, 3) != derive_seed(8, 3));

  std::uint64_t state = 123;
  const std::uint64_t first = splitmix64_next(state);
  CHECK(state != 123);
  std::uint64_t replay = 123;
  CHECK(splitmix64_next(replay) == first);
}

TEST_CASE("uniforms stay in the unit interval") {
  RngStream rng(1);
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("normals have the right first two moments") {
  RngStream rng(2);
  const int n = 40000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.04);
}

TEST_CASE("random single-qubit matrices are unitary") {
  RngStream rng(3);
  for (int i = 0; i < 200; ++i) {
    REQUIRE(unitarity_defect_1q(haar_random_1q(rng)) < 1e-12);
  }
}

TEST_CASE("random two-qubit matrices are unitary") {
  RngStream rng(4);
  for (int i = 0; i < 50; ++i) {
    REQUIRE(unitarity_defect_2q(haar_random_2q(rng)) < 1e-12);
  }
}

TEST_CASE("corner entry carries half the weight on average") {
  RngStream rng(5);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Matrix2 u = haar_random_1q(rng);
    sum += std::norm(u.m00);
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
  CHECK(std::abs(sum / n - 0.5) < 0.01);
}

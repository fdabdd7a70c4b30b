#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "stateprep/decompose.hpp"
#include "stateprep/exponent_count.hpp"
#include "stateprep/schedule.hpp"
#include "stateprep/w_state.hpp"

using namespace stateprep;

namespace {

constexpr double kPi = 3.14159265358979323846;

Schedule scheduled_cascade(int n) {
  return schedule(decompose_controlled_rotations(build_w_cascade(n)));
}

}  // namespace

TEST_CASE("cascade angles pass amplitude down the line") {
  CHECK(w_cascade_angle(1) == doctest::Approx(0.0));
  CHECK(w_cascade_angle(2) == doctest::Approx(kPi / 2.0));
  CHECK(w_cascade_angle(4) == doctest::Approx(2.0 * kPi / 3.0));
  CHECK_THROWS_AS((void)w_cascade_angle(0), std::invalid_argument);
}

TEST_CASE("cascade closed form, spot values") {
  CHECK(w_cascade_exponents(2) == ExponentVector{2, 2, 1, 0, 0, 0, 0});
  CHECK(w_cascade_exponents(4) == ExponentVector{8, 16, 7, 14, 0, 0, 0});
}

TEST_CASE("cascade closed form matches the layer count") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    const Schedule s = scheduled_cascade(n);
    CHECK(w_cascade_exponents(n) == count_exponents(s));
    CHECK(s.depth() == 5 * n - 7);
  }
}

TEST_CASE("cascade rejects degenerate registers") {
  CHECK_THROWS_AS((void)build_w_cascade(1), std::invalid_argument);
  CHECK_THROWS_AS((void)build_w_cascade(0), std::invalid_argument);
  CHECK_THROWS_AS((void)w_cascade_exponents(1), std::invalid_argument);
}

TEST_CASE("built cascades validate, raw and decomposed") {
  for (int n = 2; n <= 8; ++n) {
    validate(build_w_cascade(n));
    validate(decompose_controlled_rotations(build_w_cascade(n)));
  }
}

TEST_CASE("parity filter closed forms") {
  CHECK(w_parity_filter_acceptance(2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(w_parity_filter_fidelity(2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w_parity_filter_acceptance(4) == doctest::Approx(7.0 / 32.0).epsilon(1e-12));
  CHECK(w_parity_filter_fidelity(4) ==
        doctest::Approx((7.0 + 4.0 * std::sqrt(3.0)) / 14.0).epsilon(1e-12));
}

TEST_CASE("parity filter circuit shape") {
  const Circuit c = build_w_parity_filter(4);
  CHECK(c.num_qubits == 3 * 5 - 1);
  validate(c);
  CHECK_THROWS_AS((void)build_w_parity_filter(1), std::invalid_argument);
}

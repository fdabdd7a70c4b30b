#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "stateprep/circuit.hpp"
#include "stateprep/statevector.hpp"

using namespace stateprep;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

Matrix4 cnot_matrix_high_control() {
  // Index is 2*bit(a) + bit(b); control a, target b.
  Matrix4 m{};
  m[0 * 4 + 0] = 1.0;
  m[1 * 4 + 1] = 1.0;
  m[2 * 4 + 3] = 1.0;
  m[3 * 4 + 2] = 1.0;
  return m;
}

}  // namespace

TEST_CASE("starts in the all-zeros state") {
  SparseState s(3);
  CHECK(s.size() == 1);
  CHECK(std::abs(s.amplitude(0) - 1.0) < 1e-15);
  CHECK(s.norm_sq() == doctest::Approx(1.0));
  CHECK_THROWS_AS(SparseState(0), std::invalid_argument);
  CHECK_THROWS_AS(SparseState(64), std::invalid_argument);
}

TEST_CASE("single-qubit gates update the right bit") {
  SparseState s(2);
  s.apply_1q(gate_matrix(Gate1Q::H, 0.0), 1);
  CHECK(std::abs(s.amplitude(0) - kInvSqrt2) < 1e-14);
  CHECK(std::abs(s.amplitude(2) - kInvSqrt2) < 1e-14);
  CHECK(s.probability_one(1) == doctest::Approx(0.5));
  CHECK(s.probability_one(0) == doctest::Approx(0.0));
}

TEST_CASE("cat state via H and CNOT") {
  SparseState s(2);
  s.apply_1q(gate_matrix(Gate1Q::H, 0.0), 0);
  s.apply_cnot(0, 1);
  CHECK(fidelity(s, ghz_state(2, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.size() == 2);
}

TEST_CASE("controlled application acts only on the one subspace") {
  SparseState s(2);
  s.apply_1q(gate_matrix(Gate1Q::H, 0.0), 0);
  s.apply_controlled(gate_matrix(Gate1Q::X, 0.0), 0, 1);
  CHECK(fidelity(s, ghz_state(2, 2)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("general two-qubit matrix agrees with the dedicated CNOT") {
  SparseState a(3);
  SparseState b(3);
  a.apply_1q(gate_matrix(Gate1Q::H, 0.0), 2);
  b.apply_1q(gate_matrix(Gate1Q::H, 0.0), 2);
  a.apply_cnot(2, 0);
  b.apply_2q(cnot_matrix_high_control(), 2, 0);
  CHECK(fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("projection renormalizes and clearing resets the bit") {
  SparseState s(2);
  s.apply_1q(gate_matrix(Gate1Q::H, 0.0), 0);
  s.apply_cnot(0, 1);
  s.project(0, 1);
  CHECK(s.norm_sq() == doctest::Approx(1.0));
  CHECK(std::norm(s.amplitude(3)) == doctest::Approx(1.0));

  SparseState t(2);
  t.apply_1q(gate_matrix(Gate1Q::H, 0.0), 0);
  t.apply_cnot(0, 1);
  t.project_and_clear(0, 1);
  CHECK(std::norm(t.amplitude(2)) == doctest::Approx(1.0));

  SparseState u(1);
  CHECK_THROWS_AS(u.project(0, 1), std::logic_error);
}

TEST_CASE("overlap of the cat state with all-zeros") {
  const SparseState zeros(3);
  CHECK(fidelity(ghz_state(3, 3), zeros) == doctest::Approx(0.5).epsilon(1e-12));
  const Amplitude ip = ghz_state(3, 3).inner(zeros);
  CHECK(std::abs(ip - Amplitude(kInvSqrt2, 0.0)) < 1e-12);
}

TEST_CASE("uniform weight-one superposition") {
  const SparseState w = w_state(3, 5);
  CHECK(w.size() == 3);
  const double a = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w.amplitude(1) - a) < 1e-14);
  CHECK(std::abs(w.amplitude(2) - a) < 1e-14);
  CHECK(std::abs(w.amplitude(4) - a) < 1e-14);
  CHECK(w.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("sorted entries filter by probability") {
  SparseState s(2);
  s.apply_1q(gate_matrix(Gate1Q::RY, 0.2), 0);
  const auto all = s.sorted_entries();
  REQUIRE(all.size() == 2);
  CHECK(all[0].first == 0);
  CHECK(all[1].first == 1);
  const auto heavy = s.sorted_entries(0.5);
  REQUIRE(heavy.size() == 1);
  CHECK(heavy[0].first == 0);
}

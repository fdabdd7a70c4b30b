#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "stateprep/exponent_count.hpp"
#include "stateprep/fanout.hpp"
#include "stateprep/schedule.hpp"
#include "stateprep/simulate.hpp"
#include "stateprep/statevector.hpp"

using namespace stateprep;

namespace {

Circuit with_data_bits(const Circuit& base, std::uint64_t bits, int data_width) {
  Circuit c(base.num_qubits, base.num_clbits);
  for (int q = 0; q < data_width; ++q) {
    if ((bits >> q) & 1) c.x(q);
  }
  c.ops.insert(c.ops.end(), base.ops.begin(), base.ops.end());
  return c;
}

void check_basis_map(const Circuit& base, int data_width, std::uint64_t in, std::uint64_t out) {
  const Circuit c = with_data_bits(base, in, data_width);
  const auto branches = enumerate_branches(c);
  double total = 0.0;
  for (const Branch& b : branches) {
    total += b.probability;
    CAPTURE(in);
    CHECK(std::norm(b.state.amplitude(out)) == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

}  // namespace

TEST_CASE("closed forms match the layer count") {
  for (int m = 2; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(fanout_circuit_exponents(m) == count_exponents(schedule(build_fanout(m))));
    CHECK(parity_circuit_exponents(m) == count_exponents(schedule(build_parity(m))));
  }
}

TEST_CASE("depth is constant in the arity") {
  for (int m = 2; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(schedule(build_fanout(m)).depth() == 11);
    CHECK(schedule(build_parity(m)).depth() == 12);
  }
}

TEST_CASE("helper budget is linear") {
  for (int m = 2; m <= 6; ++m) {
    const Circuit c = build_fanout(m);
    CHECK(c.num_qubits == 3 * m - 1);
    CHECK(c.num_clbits == 3 * m - 1);
    validate(c);
    validate(build_parity(m));
  }
  CHECK_THROWS_AS((void)build_fanout(1), std::invalid_argument);
  CHECK_THROWS_AS((void)parity_circuit_exponents(0), std::invalid_argument);
}

TEST_CASE("broadcast copies the source onto every copy, all basis inputs") {
  for (const int m : {2, 3, 4}) {
    const Circuit base = build_fanout(m);
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << m); ++in) {
      const std::uint64_t x = in & 1;
      std::uint64_t out = in;
      if (x == 1) {
        for (int j = 1; j < m; ++j) out ^= std::uint64_t{1} << j;
      }
      check_basis_map(base, m, in, out);
    }
  }
}

TEST_CASE("broadcast of a superposed source yields a cat state") {
  for (const int m : {2, 3, 4}) {
    Circuit c(3 * m - 1, 3 * m - 1);
    c.h(0);
    const Circuit base = build_fanout(m);
    c.ops.insert(c.ops.end(), base.ops.begin(), base.ops.end());
    const SparseState target = ghz_state(m, c.num_qubits);
    for (const Branch& b : enumerate_branches(c)) {
      CAPTURE(m);
      CHECK(fidelity(b.state, target) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("parity folds the inputs onto the target, all basis inputs") {
  for (const int m : {2, 3, 4}) {
    const Circuit base = build_parity(m);
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << m); ++in) {
      std::uint64_t parity = 0;
      for (int j = 1; j < m; ++j) parity ^= (in >> j) & 1;
      const std::uint64_t out = in ^ parity;
      check_basis_map(base, m, in, out);
    }
  }
}

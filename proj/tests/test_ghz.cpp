#include <doctest.h>

#include <stdexcept>
#include <variant>

#include "stateprep/exponent_count.hpp"
#include "stateprep/ghz.hpp"
#include "stateprep/schedule.hpp"

using namespace stateprep;

namespace {

ExponentVector oracle(int n, GhzVariant v, int k = 1) {
  return count_exponents(schedule(build_ghz(n, v, k)));
}

ExponentVector layer_class_tally(const Schedule& s) {
  ExponentVector e;
  for (const Layer& layer : s.layers) {
    switch (layer.cls) {
      case LayerClass::Single:
        ++e.is;
        break;
      case LayerClass::Double:
        ++e.id;
        break;
      case LayerClass::Measure:
        ++e.im;
        break;
      case LayerClass::Classical:
        ++e.ic;
        break;
    }
  }
  return e;
}

int count_measures(const Circuit& c) {
  int n = 0;
  for (const GateOp& op : c.ops) n += std::holds_alternative<MeasureOp>(op) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("doubling cascade shape") {
  const Circuit c = build_ghz(8, GhzVariant::AllToAll);
  CHECK(c.num_qubits == 8);
  CHECK(c.num_clbits == 0);
  CHECK(c.ops.size() == 8);
  CHECK(std::holds_alternative<Apply1Q>(c.ops[0]));
  for (std::size_t i = 1; i < c.ops.size(); ++i) CHECK(std::holds_alternative<ApplyCnot>(c.ops[i]));
}

TEST_CASE("constant-depth variant uses helper qubits and measurements") {
  const Circuit c = build_ghz(3, GhzVariant::Adaptive);
  CHECK(c.num_qubits == 5);
  CHECK(count_measures(c) == 2);
  const Schedule s = schedule(c);
  CHECK(s.depth() == 6);
}

TEST_CASE("closed forms match the layer count, spot values") {
  CHECK(ghz_exponents(8, GhzVariant::AllToAll) == ExponentVector{1, 7, 7, 10, 0, 0, 0});
  CHECK(ghz_exponents(7, GhzVariant::Linear) == ExponentVector{1, 6, 6, 16, 0, 0, 0});
  CHECK(ghz_exponents(6, GhzVariant::Adaptive) == ExponentVector{9, 8, 10, 2, 5, 6, 6});
  CHECK(ghz_exponents(6, GhzVariant::HybridLinear, 2) == ExponentVector{5, 8, 6, 16, 1, 6, 6});
  CHECK(ghz_exponents(55, GhzVariant::Linear) == ExponentVector{1, 54, 54, 1432, 0, 0, 0});
  CHECK(ghz_exponents(55, GhzVariant::Adaptive) == ExponentVector{82, 82, 108, 2, 54, 55, 55});

  for (const int n : {2, 3, 4, 6, 8, 9, 12, 16, 55}) {
    CAPTURE(n);
    CHECK(ghz_exponents(n, GhzVariant::AllToAll) == oracle(n, GhzVariant::AllToAll));
    CHECK(ghz_exponents(n, GhzVariant::Linear) == oracle(n, GhzVariant::Linear));
    CHECK(ghz_exponents(n, GhzVariant::Adaptive) == oracle(n, GhzVariant::Adaptive));
  }
}

TEST_CASE("hybrid closed forms match the layer count over block counts") {
  for (const int n : {4, 6, 8, 12, 16, 18, 20}) {
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(ghz_exponents(n, GhzVariant::HybridAll, k) == oracle(n, GhzVariant::HybridAll, k));
      CHECK(ghz_exponents(n, GhzVariant::HybridLinear, k) ==
            oracle(n, GhzVariant::HybridLinear, k));
    }
  }
}

TEST_CASE("three-wide linear blocks keep their fusion after the cascade") {
  CHECK(ghz_exponents(6, GhzVariant::HybridLinear, 2).id == 16);
  CHECK(oracle(6, GhzVariant::HybridLinear, 2).id == 16);
  CHECK(ghz_exponents(9, GhzVariant::HybridLinear, 3) == oracle(9, GhzVariant::HybridLinear, 3));
}

TEST_CASE("one-block hybrids degenerate to the plain variants") {
  CHECK(ghz_exponents(6, GhzVariant::HybridAll, 1) == ghz_exponents(6, GhzVariant::AllToAll));
  CHECK(ghz_exponents(6, GhzVariant::HybridLinear, 1) == ghz_exponents(6, GhzVariant::Linear));
  CHECK(oracle(6, GhzVariant::HybridAll, 1) == oracle(6, GhzVariant::AllToAll));
}

TEST_CASE("alternate idle accounting differs by one idle slot") {
  for (const int n : {2, 5, 8, 55}) {
    const ExponentVector honest = ghz_exponents(n, GhzVariant::Adaptive);
    const ExponentVector alt = ghz_adaptive_alternate_exponents(n);
    CHECK(alt == honest + ExponentVector{0, 1, 0, 0, 0, 0, 0});
  }
  CHECK(ghz_adaptive_alternate_exponents(55).is == 83);
}

TEST_CASE("bystander cost equals one idle slot per layer") {
  for (const int n : {2, 3, 4, 7, 8, 16, 55}) {
    for (const GhzVariant v : {GhzVariant::AllToAll, GhzVariant::Linear, GhzVariant::Adaptive}) {
      CAPTURE(n);
      const ExponentVector idle = ghz_idle_exponents(n, v);
      CHECK(idle == layer_class_tally(schedule(build_ghz(n, v))));
      CHECK(idle.s == 0);
      CHECK(idle.d == 0);
      CHECK(idle.m == 0);
    }
  }
  CHECK(ghz_idle_exponents(8, GhzVariant::AllToAll) == ExponentVector{0, 1, 0, 3, 0, 0, 0});
  CHECK(ghz_idle_exponents(7, GhzVariant::Linear) == ExponentVector{0, 1, 0, 4, 0, 0, 0});
  CHECK(ghz_idle_exponents(9, GhzVariant::Adaptive) == ExponentVector{0, 2, 0, 2, 0, 1, 1});
}

TEST_CASE("argument checking") {
  CHECK_THROWS_AS((void)build_ghz(1, GhzVariant::AllToAll), std::invalid_argument);
  CHECK_THROWS_AS((void)build_ghz(6, GhzVariant::HybridAll, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)build_ghz(6, GhzVariant::HybridAll, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)ghz_exponents(1, GhzVariant::Linear), std::invalid_argument);
  CHECK_THROWS_AS((void)ghz_idle_exponents(6, GhzVariant::HybridAll), std::invalid_argument);
}

TEST_CASE("built circuits validate") {
  for (const int n : {2, 3, 6, 10}) {
    validate(build_ghz(n, GhzVariant::AllToAll));
    validate(build_ghz(n, GhzVariant::Linear));
    validate(build_ghz(n, GhzVariant::Adaptive));
  }
  validate(build_ghz(12, GhzVariant::HybridAll, 4));
  validate(build_ghz(12, GhzVariant::HybridLinear, 3));
}

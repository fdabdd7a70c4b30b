#include <doctest.h>

#include <vector>

#include "stateprep/circuit.hpp"
#include "stateprep/schedule.hpp"

using namespace stateprep;

TEST_CASE("layers are homogeneous and in dependency order") {
  Circuit c(2, 1);
  c.h(0);
  c.cnot(0, 1);
  c.measure(1, 0);
  const Schedule s = schedule(c);
  REQUIRE(s.depth() == 3);
  CHECK(s.layers[0].cls == LayerClass::Single);
  CHECK(s.layers[1].cls == LayerClass::Double);
  CHECK(s.layers[2].cls == LayerClass::Measure);
  CHECK(s.layers[0].active == std::vector<int>{0});
  CHECK(s.layers[0].idle == std::vector<int>{1});
  CHECK(s.layers[1].active == std::vector<int>{0, 1});
  CHECK(s.layers[1].idle.empty());
  CHECK(s.layers[2].active == std::vector<int>{1});
  CHECK(s.layers[2].idle == std::vector<int>{0});
}

TEST_CASE("single-qubit work is emitted before ready two-qubit work") {
  Circuit c(3, 0);
  c.cnot(1, 2);
  c.h(0);
  const Schedule s = schedule(c);
  REQUIRE(s.depth() == 2);
  CHECK(s.layers[0].cls == LayerClass::Single);
  CHECK(s.layers[0].ops == std::vector<std::size_t>{1});
  CHECK(s.layers[1].cls == LayerClass::Double);
}

TEST_CASE("plain singles outrank conditional singles") {
  Circuit c(3, 1);
  c.measure(0, 0);
  c.cond_x(0, 1);
  c.x(0);
  const Schedule s = schedule(c);
  REQUIRE(s.depth() == 3);
  CHECK(s.layers[0].cls == LayerClass::Measure);
  CHECK(s.layers[1].cls == LayerClass::Single);
  CHECK_FALSE(s.layers[1].conditional);
  CHECK(s.layers[1].active == std::vector<int>{0});
  CHECK(s.layers[2].cls == LayerClass::Single);
  CHECK(s.layers[2].conditional);
  CHECK(s.layers[2].active == std::vector<int>{1});
}

TEST_CASE("consumed qubits leave the live set") {
  Circuit c(3, 1);
  c.measure(0, 0, true);
  c.cond_x(0, 1);
  const Schedule s = schedule(c);
  REQUIRE(s.depth() == 2);
  CHECK(s.layers[0].cls == LayerClass::Measure);
  CHECK(s.layers[0].active == std::vector<int>{0});
  CHECK(s.layers[0].idle == std::vector<int>{1, 2});
  CHECK(s.layers[1].active == std::vector<int>{1});
  CHECK(s.layers[1].idle == std::vector<int>{2});
}

TEST_CASE("classical layers list every live qubit as idle") {
  Circuit c(3, 3);
  c.measure(0, 0, true);
  c.measure(1, 1);
  c.classical(ClassicalFn::Parity, {0, 1}, {2});
  const Schedule s = schedule(c);
  REQUIRE(s.depth() == 2);
  CHECK(s.layers[1].cls == LayerClass::Classical);
  CHECK(s.layers[1].active.empty());
  CHECK(s.layers[1].idle == std::vector<int>{1, 2});
}

TEST_CASE("classical bits order measurements before reads") {
  Circuit c(2, 1);
  c.measure(0, 0);
  c.cond_x(0, 1);
  const Schedule s = schedule(c);
  REQUIRE(s.depth() == 2);
  CHECK(s.layers[0].cls == LayerClass::Measure);
  CHECK(s.layers[1].conditional);
}

TEST_CASE("two-qubit parallelism can be capped") {
  Circuit c(4, 0);
  c.cnot(0, 1);
  c.cnot(2, 3);

  const Schedule unlimited = schedule(c);
  REQUIRE(unlimited.depth() == 1);
  CHECK(unlimited.layers[0].ops.size() == 2);

  const Schedule capped = schedule(c, ScheduleOptions{1});
  REQUIRE(capped.depth() == 2);
  CHECK(capped.layers[0].ops.size() == 1);
  CHECK(capped.layers[1].ops.size() == 1);
  CHECK(capped.layers[0].idle == std::vector<int>{2, 3});
  CHECK(capped.layers[1].idle == std::vector<int>{0, 1});
}

TEST_CASE("every op is scheduled exactly once") {
  Circuit c(5, 4);
  c.h(0);
  c.cnot(0, 1);
  c.cnot(0, 2);
  c.measure(1, 0, true);
  c.measure(2, 1, true);
  c.classical(ClassicalFn::Parity, {0, 1}, {2});
  c.cond_x(2, 3);
  c.cond_z(2, 4);
  const Schedule s = schedule(c);
  std::vector<bool> seen(c.ops.size(), false);
  for (const Layer& layer : s.layers) {
    for (std::size_t idx : layer.ops) {
      CHECK_FALSE(seen[idx]);
      seen[idx] = true;
    }
  }
  for (bool b : seen) CHECK(b);
}

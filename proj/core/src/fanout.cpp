#include "stateprep/fanout.hpp"

#include <stdexcept>

namespace stateprep {

namespace {

// Shared layout for the broadcast gadget on arity m:
//   qubit 0         source x
//   qubits 1..m-1   copies y_1..y_{m-1}
//   qubits m..2m-1  carriers g_1..g_m
//   qubits 2m..3m-2 links a_1..a_{m-1}
// classical bits:
//   0..m-2    link outcomes, m-1 source-carrier outcome,
//   m..2m-2   X corrections, 2m-1..3m-3 carrier closeout outcomes,
//   3m-2      Z correction.
struct FanoutLayout {
  int m;
  int x() const { return 0; }
  int y(int j) const { return j; }                // j in [1, m-1]
  int g(int j) const { return m + j - 1; }        // j in [1, m]
  int a(int i) const { return 2 * m + i - 1; }    // i in [1, m-1]
  int c_link(int i) const { return i - 1; }       // i in [1, m-1]
  int c_source() const { return m - 1; }
  int c_fix(int j) const { return m + j - 2; }    // flip flag for g_j, j in [2, m]
  int c_close(int j) const { return 2 * m + j - 3; }  // outcome of g_j, j in [2, m]
  int c_parity() const { return 3 * m - 2; }
  int num_qubits() const { return 3 * m - 1; }
  int num_clbits() const { return 3 * m - 1; }
};

void append_fanout_body(Circuit& c, const FanoutLayout& q) {
  const int m = q.m;

  // Carrier cat state: Hadamards, then links pick up neighbour parities.
  for (int j = 1; j <= m; ++j) c.h(q.g(j));
  for (int i = 1; i <= m - 1; ++i) c.cnot(q.g(i), q.a(i));
  for (int i = 1; i <= m - 1; ++i) c.cnot(q.g(i + 1), q.a(i));
  c.cnot(q.x(), q.g(1));

  // One measurement round fixes all carriers relative to the source.
  for (int i = 1; i <= m - 1; ++i) c.measure(q.a(i), q.c_link(i), /*consume=*/true);
  c.measure(q.g(1), q.c_source(), /*consume=*/true);

  std::vector<int> inputs{q.c_source()};
  for (int i = 1; i <= m - 1; ++i) inputs.push_back(q.c_link(i));
  std::vector<int> outputs;
  for (int j = 2; j <= m; ++j) outputs.push_back(q.c_fix(j));
  c.classical(ClassicalFn::FanoutXCorrect, std::move(inputs), std::move(outputs));
  for (int j = 2; j <= m; ++j) c.cond_x(q.c_fix(j), q.g(j));

  // Drop the value onto the copies, then close the carriers out in the X
  // basis; odd closeout parity leaves a Z on the source.
  for (int j = 2; j <= m; ++j) c.cnot(q.g(j), q.y(j - 1));
  for (int j = 2; j <= m; ++j) c.h(q.g(j));
  for (int j = 2; j <= m; ++j) c.measure(q.g(j), q.c_close(j), /*consume=*/true);

  std::vector<int> close_bits;
  for (int j = 2; j <= m; ++j) close_bits.push_back(q.c_close(j));
  c.classical(ClassicalFn::Parity, std::move(close_bits), {q.c_parity()});
  c.cond_z(q.c_parity(), q.x());
}

void check_arity(int arity) {
  if (arity < 2) throw std::invalid_argument("broadcast gadgets need arity at least 2");
}

}  // namespace

Circuit build_fanout(int arity) {
  check_arity(arity);
  const FanoutLayout q{arity};
  Circuit c(q.num_qubits(), q.num_clbits());
  append_fanout_body(c, q);
  return c;
}

Circuit build_parity(int arity) {
  check_arity(arity);
  const FanoutLayout q{arity};
  Circuit c(q.num_qubits(), q.num_clbits());
  c.h(q.x());
  for (int j = 1; j <= arity - 1; ++j) c.h(q.y(j));
  append_fanout_body(c, q);
  for (int j = 1; j <= arity - 1; ++j) c.h(q.y(j));
  c.h(q.x());
  return c;
}

ExponentVector fanout_circuit_exponents(int arity) {
  check_arity(arity);
  const std::int64_t m = arity;
  const std::int64_t half = (m - 1) / 2;
  return {2 * m - 1 + half, 6 * m - 2 - half, 3 * m - 2, 2 * m + 1, 2 * m - 1, 3 * m - 1, 3 * m - 1};
}

ExponentVector parity_circuit_exponents(int arity) {
  check_arity(arity);
  const std::int64_t m = arity;
  const std::int64_t half = (m - 1) / 2;
  return {4 * m - 1 + half, 5 * m - 2 - half, 3 * m - 2, 2 * m + 1, 2 * m - 1, 3 * m - 1, 3 * m - 1};
}

}  // namespace stateprep

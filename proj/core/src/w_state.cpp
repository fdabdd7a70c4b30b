#include "stateprep/w_state.hpp"

#include <cmath>
#include <stdexcept>

#include "stateprep/fanout.hpp"

namespace stateprep {

double w_cascade_angle(int m) {
  if (m < 1) throw std::invalid_argument("cascade position must be positive");
  return 2.0 * std::acos(std::sqrt(1.0 / static_cast<double>(m)));
}

Circuit build_w_cascade(int n) {
  if (n < 2) throw std::invalid_argument("W preparation needs at least 2 qubits");
  Circuit c(n, 0);
  c.ry(0, w_cascade_angle(n));
  for (int i = 1; i <= n - 2; ++i) c.cry(i - 1, i, w_cascade_angle(n - i));
  c.cnot(n - 2, n - 1);
  for (int j = n - 3; j >= 0; --j) c.cnot(j, j + 1);
  c.x(0);
  return c;
}

ExponentVector w_cascade_exponents(int n) {
  if (n < 2) throw std::invalid_argument("W preparation needs at least 2 qubits");
  const std::int64_t nn = n;
  return {3 * nn - 4, nn * (2 * nn - 5) + 4, 3 * nn - 5, nn * (3 * nn - 11) + 10, 0, 0, 0};
}

Circuit build_w_parity_filter(int n) {
  if (n < 2) throw std::invalid_argument("W preparation needs at least 2 qubits");
  const int arity = n + 1;
  const Circuit gadget = build_parity(arity);

  Circuit c(gadget.num_qubits, gadget.num_clbits + 1);
  const double theta = std::acos(std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n)));
  for (int q = 1; q <= n; ++q) c.ry(q, theta);
  c.ops.insert(c.ops.end(), gadget.ops.begin(), gadget.ops.end());
  c.measure(0, gadget.num_clbits, /*consume=*/true);
  return c;
}

double w_parity_filter_acceptance(int n) {
  const double ratio = static_cast<double>(n - 1) / static_cast<double>(n);
  return (1.0 - std::pow(ratio, n / 2.0)) / 2.0;
}

double w_parity_filter_fidelity(int n) {
  const double theta = std::acos(std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n)));
  const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
  const double weight_one = n * std::pow(c2, n - 1) * (1.0 - c2);
  return weight_one / w_parity_filter_acceptance(n);
}

}  // namespace stateprep

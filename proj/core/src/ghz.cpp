#include "stateprep/ghz.hpp"

#include <stdexcept>
#include <string>

namespace stateprep {

namespace {

void check_ghz_args(int n, GhzVariant v, int k) {
  if (n < 2) throw std::invalid_argument("GHZ preparation needs at least 2 qubits");
  const bool hybrid = v == GhzVariant::HybridAll || v == GhzVariant::HybridLinear;
  if (hybrid) {
    if (k < 1 || k > n) throw std::invalid_argument("block count must be in [1, n]");
    if (n % k != 0) throw std::invalid_argument("block count must divide n");
  }
}

void emit_all_to_all(Circuit& c, int first, int n) {
  // Doubling cascade within [first, first + n): every qubit that already
  // carries the state copies it one stride further.
  c.h(first);
  for (int stride = 1; stride < n; stride *= 2) {
    const int copies = std::min(stride, n - stride);
    for (int i = 0; i < copies; ++i) c.cnot(first + i, first + i + stride);
  }
}

void emit_linear(Circuit& c, int first, int n) {
  // Spread from the middle qubit outward, one neighbour per step on each
  // side. The right side starts one step ahead.
  const int start = (n + 1) / 2 - 1;
  c.h(first + start);
  if (n >= 2) c.cnot(first + start, first + start + 1);
  for (int i = 0;; ++i) {
    const int left_to = start - i - 1;
    const int right_to = start + 2 + i;
    bool progress = false;
    if (left_to >= 0) {
      c.cnot(first + left_to + 1, first + left_to);
      progress = true;
    }
    if (right_to <= n - 1) {
      c.cnot(first + right_to - 1, first + right_to);
      progress = true;
    }
    if (!progress) break;
  }
}

Circuit build_hybrid(int n, GhzVariant block_variant, int k) {
  // k blocks of g data qubits each, prepared independently and fused by one
  // measured link qubit per boundary. Data qubits come first, links after.
  const int g = n / k;
  const int num_links = k - 1;
  Circuit c(n + num_links, 2 * k - 1);

  for (int b = 0; b < k; ++b) {
    const int first = b * g;
    if (g == 1) {
      c.h(first);
    } else if (block_variant == GhzVariant::AllToAll) {
      emit_all_to_all(c, first, g);
    } else {
      emit_linear(c, first, g);
    }
  }

  // Fuse adjacent blocks: the link qubit picks up the parity of the two
  // endpoints that meet at the boundary. The first fusion round reads the
  // following block's first qubit, which stays busy through that block's
  // last cascade layer, so the fusion never slides into the cascade.
  for (int b = 0; b < num_links; ++b) c.cnot((b + 1) * g, n + b);
  for (int b = 0; b < num_links; ++b) c.cnot((b + 1) * g - 1, n + b);
  for (int b = 0; b < num_links; ++b) c.measure(n + b, b, /*consume=*/true);

  std::vector<int> inputs, outputs;
  for (int b = 0; b < num_links; ++b) inputs.push_back(b);
  for (int b = 0; b < k; ++b) outputs.push_back(num_links + b);
  c.classical(ClassicalFn::GhzCorrect, inputs, outputs);

  for (int q = 0; q < n; ++q) c.cond_x(num_links + q / g, q);
  return c;
}

}  // namespace

const char* variant_name(GhzVariant v) {
  switch (v) {
    case GhzVariant::AllToAll:
      return "all";
    case GhzVariant::Linear:
      return "linear";
    case GhzVariant::Adaptive:
      return "adaptive";
    case GhzVariant::HybridAll:
      return "hybrid-all";
    case GhzVariant::HybridLinear:
      return "hybrid-linear";
  }
  return "?";
}

Circuit build_ghz(int n, GhzVariant v, int k) {
  check_ghz_args(n, v, k);
  switch (v) {
    case GhzVariant::AllToAll: {
      Circuit c(n, 0);
      emit_all_to_all(c, 0, n);
      return c;
    }
    case GhzVariant::Linear: {
      Circuit c(n, 0);
      emit_linear(c, 0, n);
      return c;
    }
    case GhzVariant::Adaptive:
      return build_hybrid(n, GhzVariant::AllToAll, n);
    case GhzVariant::HybridAll:
      if (k == 1) return build_ghz(n, GhzVariant::AllToAll);
      return build_hybrid(n, GhzVariant::AllToAll, k);
    case GhzVariant::HybridLinear:
      if (k == 1) return build_ghz(n, GhzVariant::Linear);
      return build_hybrid(n, GhzVariant::Linear, k);
  }
  throw std::invalid_argument("unknown variant");
}

ExponentVector ghz_exponents(int n, GhzVariant v, int k) {
  check_ghz_args(n, v, k);
  const std::int64_t nn = n;
  switch (v) {
    case GhzVariant::AllToAll:
      return {1, nn - 1, nn - 1, nn * (ceil_log2(nn) - 2) + 2, 0, 0, 0};
    case GhzVariant::Linear:
      return {1, nn - 1, nn - 1, nn * ((nn + 1) / 2 - 2) + 2, 0, 0, 0};
    case GhzVariant::Adaptive:
      return {nn + nn / 2, nn + (nn + 1) / 2 - 1, 2 * (nn - 1), 2, nn - 1, nn, nn};
    case GhzVariant::HybridAll:
    case GhzVariant::HybridLinear: {
      if (k == 1) {
        return ghz_exponents(n, v == GhzVariant::HybridAll ? GhzVariant::AllToAll : GhzVariant::Linear);
      }
      const std::int64_t kk = k;
      const std::int64_t g = nn / kk;
      std::int64_t block_layers = 0;
      if (g > 1) block_layers = v == GhzVariant::HybridAll ? ceil_log2(g) : (g + 1) / 2;
      return {kk + nn / 2,
              nn + (nn + 1) / 2 - 1,
              nn + kk - 2,
              (nn + kk - 1) * block_layers + 2,
              kk - 1,
              nn,
              nn};
    }
  }
  throw std::invalid_argument("unknown variant");
}

ExponentVector ghz_adaptive_alternate_exponents(int n) {
  ExponentVector e = ghz_exponents(n, GhzVariant::Adaptive);
  e.is += 1;
  return e;
}

ExponentVector ghz_idle_exponents(int n, GhzVariant v) {
  check_ghz_args(n, v, 1);
  ExponentVector e;
  switch (v) {
    case GhzVariant::AllToAll:
      e.is = 1;
      e.id = ceil_log2(n);
      return e;
    case GhzVariant::Linear:
      e.is = 1;
      e.id = (n + 1) / 2;
      return e;
    case GhzVariant::Adaptive:
      e.is = 2;
      e.id = 2;
      e.im = 1;
      e.ic = 1;
      return e;
    case GhzVariant::HybridAll:
    case GhzVariant::HybridLinear:
      break;
  }
  throw std::invalid_argument("idle forms exist for the non-hybrid variants only");
}

}  // namespace stateprep

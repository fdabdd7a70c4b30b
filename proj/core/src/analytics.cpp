#include "stateprep/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stateprep {

namespace {

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }
std::int64_t floor_half(std::int64_t x) { return x / 2; }

std::int64_t pow2(std::int64_t e) { return std::int64_t{1} << e; }

std::int64_t exact_log2(std::int64_t n) {
  if (n < 1 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("argument must be a power of two");
  }
  std::int64_t k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

ExponentVector fanout_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("fanout arity must be >= 1");
  ExponentVector e;
  e.s = 2 * n + ceil_half(n - 1);
  e.is = 5 * n + floor_half(n - 1) - 2;
  e.d = 3 * n - 2;
  e.id = 2 * n + 1;
  e.m = 2 * n - 1;
  e.im = 3 * n - 1;
  e.ic = 3 * n - 1;
  return e;
}

ExponentVector parity_bound(std::int64_t n) {
  ExponentVector e = fanout_bound(n);
  e.s = 4 * n + ceil_half(n - 1) - 1;
  e.is = 3 * n + floor_half(n - 1) - 1;
  return e;
}

ExponentVector fanout_idle_bound() {
  ExponentVector e;
  e.is = 4;
  e.id = 3;
  e.im = 2;
  e.ic = 2;
  return e;
}

ExponentVector or_reduction_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("OR arity must be >= 1");
  const std::int64_t t = ceil_log2(n + 1);
  ExponentVector e;
  e.s = 11 * n * t + 2 * (n * ceil_half(t - 1) + t * ceil_half(n - 1)) + 2 * t;
  e.is = 23 * n * t + 2 * n * floor_half(t - 1) + 2 * t * floor_half(n - 1) - 4 * (n + t);
  e.d = 14 * n * t - 4 * (n + t);
  e.id = 8 * n * t + 2 * (n + t);
  e.m = 8 * n * t - 2 * (n + t);
  e.im = 12 * n * t - 2 * (n + t);
  e.ic = e.im;
  return e;
}

ExponentVector or_gate_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("OR arity must be >= 1");
  const std::int64_t t = ceil_log2(n + 1);
  const std::int64_t p = pow2(t);
  ExponentVector e;
  e.s = 22 * n * t + 2 * (2 * n - p - 1) * ceil_half(t - 1) + 4 * t * ceil_half(n - 1) +
        2 * t * ceil_half(pow2(t - 1) - 1) + 2 * ceil_half(p - 1) + 10 * t * p + 3 * p - 4 * t - 2;
  e.is = 2 * (2 * n + p - 1) * floor_half(t - 1) + 4 * t * floor_half(n - 1) +
         2 * t * floor_half(pow2(t - 1) - 1) + 2 * floor_half(p - 1) + 46 * n * t - 8 * n -
         18 * t + 11 * t * p + 3 * p - 5;
  e.d = 28 * n * t - 8 * n - 18 * t + 9 * t * p + 2 * p - 6;
  e.id = 16 * n * t + 4 * n + 2 * t + 6 * t * p + 2 * p + 2;
  e.m = 16 * n * t - 4 * n - 10 * t + 6 * t * p - 2;
  e.im = 24 * n * t - 4 * n - 12 * t + 9 * t * p;
  e.ic = e.im;
  return e;
}

ExponentVector or_gate_pow2_bound(std::int64_t n) {
  const std::int64_t k = exact_log2(n);
  ExponentVector e;
  e.s = 42 * n * k + 50 * n - 4 * k + 2 * (2 * k - 2 * n + 1) * ceil_half(k) +
        6 * (k + 1) * ceil_half(n - 1) - 6;
  e.is = 68 * n * k + 68 * n - 18 * k + 2 * (4 * n - 1) * floor_half(k) +
         6 * (k + 1) * floor_half(n - 1) - 25;
  e.d = 46 * n * k + 42 * n - 18 * k - 24;
  e.id = 28 * n * k + 36 * n + 2 * k + 4;
  e.m = 28 * n * k + 24 * n - 10 * k - 12;
  e.im = 42 * n * k + 38 * n - 12 * k - 12;
  e.ic = e.im;
  return e;
}

ExponentVector equal_i_bound(std::int64_t k) {
  ExponentVector e = or_gate_bound(k);
  e.s += 2 * k;
  e.is += 2;
  return e;
}

ExponentVector cz_target_bound(std::int64_t k) {
  ExponentVector e = fanout_bound(k + 1);
  e.s += 2 * k;
  e.is += 2;
  return e;
}

ExponentVector uncompress_bound(std::int64_t n) {
  const std::int64_t k = exact_log2(n);
  ExponentVector e;
  e.s = k;
  e.is = n * k + n - k;
  e += fanout_bound(n) * (2 * k);
  e += fanout_idle_bound() * (2 * n);
  e += equal_i_bound(k) * n;
  return e;
}

ExponentVector compress_bound(std::int64_t n) {
  const std::int64_t k = exact_log2(n);
  ExponentVector e;
  e.s = 2 * k;
  e.is = 2 * (n * k + n - k);
  e += fanout_bound(n) * (2 * k);
  e += fanout_idle_bound() * (2 * n);
  e += cz_target_bound(k) * n;
  return e;
}

}  // namespace

ExponentVector subroutine_exponents(Subroutine kind, std::int64_t n) {
  switch (kind) {
    case Subroutine::Fanout:
      return fanout_bound(n);
    case Subroutine::Parity:
      return parity_bound(n);
    case Subroutine::FanoutIdle:
      return fanout_idle_bound();
    case Subroutine::OrReduction:
      return or_reduction_bound(n);
    case Subroutine::OrGate:
      return or_gate_bound(n);
    case Subroutine::OrGatePow2:
      return or_gate_pow2_bound(n);
    case Subroutine::Uncompress:
      return uncompress_bound(n);
    case Subroutine::Compress:
      return compress_bound(n);
    case Subroutine::EqualI:
      return equal_i_bound(n);
    case Subroutine::CzTarget:
      return cz_target_bound(n);
  }
  throw std::invalid_argument("unknown subroutine kind");
}

ExponentVector controlled_phase_exponents() {
  ExponentVector e;
  e.s = 3;
  e.is = 3;
  e.d = 2;
  return e;
}

ExponentVector w_adaptive_exponents(std::int64_t n) {
  const std::int64_t k = exact_log2(n);
  if (k < 1) throw std::invalid_argument("adaptive W preparation needs n >= 2");
  const std::int64_t t = ceil_log2(k + 1);
  const std::int64_t p = pow2(t);
  ExponentVector e;
  e.s = 22 * n * k * t + 14 * n * k + 2 * n * ceil_half(p - 1) + n * (3 * p + ceil_half(k)) +
        2 * n * t * (5 * p - 2) + 3 * k + 4 * k * ceil_half(n - 1) +
        2 * n * (2 * k - p - 1) * ceil_half(t - 1) + 4 * n * t * ceil_half(k - 1) +
        2 * n * t * ceil_half(pow2(t - 1) - 1) + 2 * n * ceil_half(p - 1);
  e.is = 46 * n * k * t + 20 * n * k + 3 * n * p - 18 * n * t + 21 * n - 11 * k +
         n * floor_half(k) + 2 * n * (2 * k + p - 1) * floor_half(t - 1) +
         4 * n * t * floor_half(k - 1) + 2 * n * t * floor_half(pow2(t - 1) - 1) +
         2 * n * floor_half(p - 1) + 11 * n * t * p + 4 * k * floor_half(n - 1);
  e.d = 28 * n * k * t + 7 * n * k + 9 * n * t * (p - 2) + 2 * n * p - 5 * n - 8 * k;
  e.id = 16 * n * k * t + 14 * n * k + 2 * n * t * (3 * p + 1) + 2 * n * p + 17 * n + 4 * k;
  e.m = 16 * n * k * t + 6 * n * k + 2 * n * t * (3 * p - 5) - n - 4 * k;
  e.im = 24 * n * k * t + 11 * n * k + 3 * n * t * (3 * p - 4) + 10 * n - 4 * k;
  e.ic = e.im;
  return e;
}

ExponentVector w_adaptive_composed_exponents(std::int64_t n) {
  if (exact_log2(n) < 1) throw std::invalid_argument("adaptive W preparation needs n >= 2");
  return uncompress_bound(n) + compress_bound(n);
}

RationalExponents w_adaptive_approx_exponents(std::int64_t n) {
  const std::int64_t k = exact_log2(n);
  if (k < 1) throw std::invalid_argument("adaptive W preparation needs n >= 2");
  const std::int64_t t = ceil_log2(k + 1);
  RationalExponents e;
  e.s = Rational(71 * n * k * t, 2) + Rational(37 * n * k, 2) + 3 * n * k - 8 * n * t - n + k;
  e.is = Rational(125 * n * k * t, 2) + Rational(47 * n * k, 2) - 22 * n * t + 21 * n - 13 * k;
  e.d = Rational(37 * n * k * t + 9 * n * k - 18 * n * t - 5 * n - 8 * k);
  e.id = Rational(22 * n * k * t + 16 * n * k + 2 * n * t + 17 * n + 4 * k);
  e.m = Rational(22 * n * k * t + 6 * n * k - 10 * n * t - n - 4 * k);
  e.im = Rational(33 * n * k * t + 11 * n * k - 12 * n * t + 10 * n - 4 * k);
  e.ic = e.im;
  return e;
}

BlockComparison w_adaptive_comparison(std::int64_t n) {
  BlockComparison cmp;
  cmp.direct = w_adaptive_exponents(n);
  cmp.composed = w_adaptive_composed_exponents(n);
  cmp.delta = cmp.direct - cmp.composed;
  return cmp;
}

const char* family_name(CrossoverFamily f) {
  switch (f) {
    case CrossoverFamily::AllVsAdaptive:
      return "all-vs-adaptive";
    case CrossoverFamily::LinearVsAdaptive:
      return "linear-vs-adaptive";
    case CrossoverFamily::HybridAll:
      return "hybrid-all";
    case CrossoverFamily::HybridLinear:
      return "hybrid-linear";
    case CrossoverFamily::WState:
      return "w-state";
  }
  return "?";
}

double noise_exponent_ratio(const ErrorTerms& t) {
  if (t.p_d <= 0.0 || t.p_id <= 0.0) {
    throw std::invalid_argument("p_d and p_id must be positive");
  }
  const double ld = std::log(t.p_d);
  const double lid = std::log(t.p_id);
  if (lid == 0.0) return std::numeric_limits<double>::infinity();
  return ld / lid;
}

Rational crossover_threshold_exact(CrossoverFamily f, std::int64_t n, std::int64_t k) {
  if (n < 2) throw std::invalid_argument("crossover thresholds need n >= 2");
  switch (f) {
    case CrossoverFamily::AllVsAdaptive:
      return Rational(n * (ceil_log2(n) - 4), 2 * (n - 1));
    case CrossoverFamily::LinearVsAdaptive:
      return Rational(n * (ceil_half(n) - 4), 2 * (n - 1));
    case CrossoverFamily::HybridAll: {
      if (k < 2) throw std::invalid_argument("hybrid comparison needs k >= 2");
      if (n % k != 0) throw std::invalid_argument("block count must divide n");
      const std::int64_t g = n / k;
      const std::int64_t b = (g == 1) ? 0 : ceil_log2(g);
      return Rational(n * (ceil_log2(n) - b - 4) - k * b, 2 * (k - 1));
    }
    case CrossoverFamily::HybridLinear: {
      if (k < 2) throw std::invalid_argument("hybrid comparison needs k >= 2");
      if (n % k != 0) throw std::invalid_argument("block count must divide n");
      const std::int64_t g = n / k;
      const std::int64_t b = (g == 1) ? 0 : ceil_half(g);
      return Rational(n * (ceil_half(n) - b - 4) - k * b, 2 * (k - 1));
    }
    case CrossoverFamily::WState:
      throw std::invalid_argument("the W-state threshold is irrational; use crossover_threshold");
  }
  throw std::invalid_argument("unknown crossover family");
}

double crossover_threshold(CrossoverFamily f, std::int64_t n, std::int64_t k) {
  if (f == CrossoverFamily::WState) {
    if (n < 3) throw std::invalid_argument("the W-state threshold needs n >= 3");
    const double l = std::log2(static_cast<double>(n));
    return 3.0 * static_cast<double>(n) / (59.0 * l * std::log2(l));
  }
  return boost::rational_cast<double>(crossover_threshold_exact(f, n, k));
}

bool adaptive_wins(CrossoverFamily f, std::int64_t n, const ErrorTerms& t, std::int64_t k) {
  if (f == CrossoverFamily::WState && n < 3) return false;
  return noise_exponent_ratio(t) <= crossover_threshold(f, n, k);
}

std::optional<std::int64_t> min_n_adaptive_wins(CrossoverFamily f, const ErrorTerms& t,
                                                std::int64_t cap) {
  if (f == CrossoverFamily::HybridAll || f == CrossoverFamily::HybridLinear) {
    throw std::invalid_argument("the scan is defined for the non-hybrid comparisons");
  }
  const std::int64_t start = (f == CrossoverFamily::WState) ? 3 : 2;
  for (std::int64_t n = start; n <= cap; ++n) {
    if (adaptive_wins(f, n, t)) return n;
  }
  return std::nullopt;
}

ReducedComparison reduced_comparison(GhzVariant plain, std::int64_t n) {
  if (plain != GhzVariant::AllToAll && plain != GhzVariant::Linear) {
    throw std::invalid_argument("reduced comparison contrasts a cascade against the adaptive form");
  }
  const ReducedExponents rp = reduce_simplified(ghz_exponents(n, plain));
  const ReducedExponents ra = reduce_simplified(ghz_exponents(n, GhzVariant::Adaptive));
  ReducedComparison out;
  out.gap_d = ra.d - rp.d;
  out.gap_id = rp.id - ra.id;
  out.threshold = Rational(out.gap_id, out.gap_d);
  return out;
}

}  // namespace stateprep

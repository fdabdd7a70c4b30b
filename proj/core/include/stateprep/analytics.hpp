#pragma once

#include <optional>

#include "stateprep/exponents.hpp"
#include "stateprep/ghz.hpp"

namespace stateprep {

/// Analytic lower-bound exponent blocks for the building blocks of the
/// adaptive W-state preparation. These are composable bounds, not
/// layer-by-layer counts: for the broadcast gadget they charge the
/// correction layers slightly differently from the scheduled circuit
/// (rounding the worst-case correction up instead of down and charging the
/// final conditional phase as an applied gate), while covering the same
/// single-qubit slot total. The parity bound additionally folds the closing
/// basis change into the correction layer, so it runs one single-qubit
/// layer shorter than the scheduled gadget.
enum class Subroutine {
  Fanout,       ///< broadcast of one qubit onto n-1 copies
  Parity,       ///< parity of n-1 qubits folded into a target
  FanoutIdle,   ///< cost of sitting out one broadcast gadget elsewhere
  OrReduction,  ///< n-input OR evaluated into phase oracles of log size
  OrGate,       ///< full OR gadget on n inputs
  OrGatePow2,   ///< same, simplified for n a power of two
  Uncompress,   ///< index register to one-hot register, n a power of two
  Compress,     ///< clears the index register against the one-hot register
  EqualI,       ///< comparator against a fixed k-bit index value
  CzTarget,     ///< controlled-Z fan onto the one-hot register, k-bit index
};

[[nodiscard]] ExponentVector subroutine_exponents(Subroutine kind, std::int64_t n);

/// Cost of one singly-controlled phase rotation when conjugated into CNOTs:
/// three single-qubit gates, two two-qubit gates, and the matching idles on
/// the partner qubit.
[[nodiscard]] ExponentVector controlled_phase_exponents();

/// Direct (printed) exponent block for the full adaptive W-state
/// preparation on n = 2^k qubits, with t = ceil(log2(k+1)).
[[nodiscard]] ExponentVector w_adaptive_exponents(std::int64_t n);

/// The same quantity assembled from its building blocks:
/// Uncompress x Compress, expanded through the bound blocks above.
[[nodiscard]] ExponentVector w_adaptive_composed_exponents(std::int64_t n);

/// Smoothed variant with all integer roundings dropped; exponents pick up
/// halves, hence the rational entries.
[[nodiscard]] RationalExponents w_adaptive_approx_exponents(std::int64_t n);

/// Side-by-side comparison of the direct block against the composed
/// product, with the per-term difference (direct minus composed).
struct BlockComparison {
  ExponentVector direct;
  ExponentVector composed;
  ExponentVector delta;
  [[nodiscard]] bool exact_match() const { return direct == composed; }
};

[[nodiscard]] BlockComparison w_adaptive_comparison(std::int64_t n);

// ---------------------------------------------------------------------------
// Crossover analysis
// ---------------------------------------------------------------------------

/// Which pair of preparations is being compared.
enum class CrossoverFamily {
  AllVsAdaptive,    ///< doubling cascade vs adaptive GHZ
  LinearVsAdaptive, ///< nearest-neighbour cascade vs adaptive GHZ
  HybridAll,        ///< doubling cascade vs k-block hybrid
  HybridLinear,     ///< nearest-neighbour cascade vs k-block hybrid
  WState,           ///< cascade W preparation vs adaptive W preparation
};

[[nodiscard]] const char* family_name(CrossoverFamily f);

/// The decision variable: ln(p_d)/ln(p_id). Two-qubit gates dominate idling
/// when this is large; the adaptive route wins when it is at most the
/// family threshold.
[[nodiscard]] double noise_exponent_ratio(const ErrorTerms& t);

/// Threshold on ln(p_d)/ln(p_id) below which the adaptive preparation has
/// the higher success probability. Hybrid families take the block count k.
[[nodiscard]] double crossover_threshold(CrossoverFamily f, std::int64_t n, std::int64_t k = 0);

/// Exact rational threshold; defined for the four GHZ families.
[[nodiscard]] Rational crossover_threshold_exact(CrossoverFamily f, std::int64_t n,
                                                 std::int64_t k = 0);

[[nodiscard]] bool adaptive_wins(CrossoverFamily f, std::int64_t n, const ErrorTerms& t,
                                 std::int64_t k = 0);

/// Smallest n (up to cap) for which the adaptive preparation wins on the
/// given terms, or nullopt if there is none below the cap. Defined for
/// AllVsAdaptive, LinearVsAdaptive and WState.
[[nodiscard]] std::optional<std::int64_t> min_n_adaptive_wins(CrossoverFamily f,
                                                              const ErrorTerms& t,
                                                              std::int64_t cap = 4096);

/// Under simplified_terms(), the adaptive-vs-cascade comparison collapses to
/// p_d^gap_d >= p_id^gap_id. Both gaps are taken from the exponent vectors
/// themselves, so tests can confirm the threshold formula against pure
/// exponent arithmetic; threshold = gap_id / gap_d.
struct ReducedComparison {
  std::int64_t gap_d = 0;
  std::int64_t gap_id = 0;
  Rational threshold;
};

/// plain must be AllToAll or Linear.
[[nodiscard]] ReducedComparison reduced_comparison(GhzVariant plain, std::int64_t n);

}  // namespace stateprep

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stateprep/exponents.hpp"
#include "stateprep/statevector.hpp"

namespace stateprep {

struct SimOptions {
  /// Upper bound on circuit width for exact simulation.
  int qubit_cap = 24;
  /// Upper bound on measurement branches for full enumeration.
  int max_branches = 4096;
};

/// One resolved measurement history of an ideal run. Consumed qubits are
/// reset to |0> after their measurement, so states from different branches
/// live on the same register and can be compared directly.
struct Branch {
  double probability = 0.0;
  SparseState state;
  std::vector<int> clbits;  ///< -1 where never written
};

/// Runs the circuit noiselessly, forking at every measurement with a
/// nonzero-probability alternative. Branches are ordered by measurement
/// record, outcome 0 first. Probabilities sum to 1.
[[nodiscard]] std::vector<Branch> enumerate_branches(const Circuit& c, const SimOptions& opts = {});

/// Qubits still holding data at the end: everything not consumed by a
/// measurement, in index order. These form the readout register.
[[nodiscard]] std::vector<int> readout_qubits(const Circuit& c);

struct ShotHistogram {
  /// Keyed by readout bitstring, lowest qubit index leftmost.
  std::map<std::string, std::int64_t> counts;
  std::int64_t shots = 0;

  [[nodiscard]] std::map<int, std::int64_t> hamming() const;
};

/// Noiseless sampling: per shot, measurements resolve randomly and the
/// readout register is measured once at the end.
[[nodiscard]] ShotHistogram sample_ideal(const Circuit& c, std::int64_t shots, std::uint64_t seed,
                                         const SimOptions& opts = {});

struct NoisyReport {
  ShotHistogram histogram;
  std::int64_t clean_shots = 0;
  std::int64_t total_error_events = 0;
  double clean_fraction = 0.0;
};

/// Worst-case-model Monte Carlo. Error sites are enumerated from the
/// schedule, one per counted exponent: failed single-qubit slots and idle
/// slots receive a Haar-random unitary in place of the intended action,
/// failed two-qubit gates a Haar-random two-qubit unitary, failed
/// measurements record the flipped bit while the state collapses to the
/// outcome actually measured. Classically controlled layers charge their
/// worst-case half of the targets at the applied-gate rate regardless of
/// the branch taken, keeping clean_fraction an unbiased estimator of the
/// counted success probability.
[[nodiscard]] NoisyReport sample_noisy(const Circuit& c, const ErrorTerms& terms,
                                       std::int64_t shots, std::uint64_t seed,
                                       const SimOptions& opts = {});

/// Exact acceptance rate and accepted-state fidelity with the W state for
/// the rotate-and-postselect preparation.
struct ParityFilterReport {
  double acceptance = 0.0;
  double fidelity_w = 0.0;
};

[[nodiscard]] ParityFilterReport w_parity_filter_exact(int n, const SimOptions& opts = {});

/// CSV with header `bitstring,count`, one row per observed readout string.
void write_histogram_csv(const ShotHistogram& h, const std::string& path);
/// CSV with header `hamming_weight,count`, weights aggregated.
void write_hamming_csv(const ShotHistogram& h, const std::string& path);
/// Reads the `bitstring,count` format back.
[[nodiscard]] ShotHistogram read_histogram_csv(const std::string& path);

}  // namespace stateprep

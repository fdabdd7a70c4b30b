#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "stateprep/exponent_count.hpp"
#include "stateprep/ghz.hpp"
#include "stateprep/schedule.hpp"
#include "stateprep/simulate.hpp"
#include "stateprep/statevector.hpp"
#include "stateprep/w_state.hpp"

using namespace stateprep;

TEST_CASE("branch enumeration resolves the adaptive preparation exactly") {
  for (int n : {3, 4}) {
    CAPTURE(n);
    const Circuit c = build_ghz(n, GhzVariant::Adaptive);
    const std::vector<Branch> branches = enumerate_branches(c);
    REQUIRE(static_cast<int>(branches.size()) == 1 << (n - 1));
    const SparseState target = ghz_state(n, c.num_qubits);
    const double each = 1.0 / static_cast<double>(branches.size());
    double total = 0.0;
    for (const Branch& b : branches) {
      total += b.probability;
      CHECK(b.probability == doctest::Approx(each).epsilon(1e-12));
      CHECK(fidelity(b.state, target) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(b.clbits.size() == static_cast<std::size_t>(c.num_clbits));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("branches come back in measurement-record order") {
  const Circuit c = build_ghz(3, GhzVariant::Adaptive);
  const std::vector<Branch> branches = enumerate_branches(c);
  REQUIRE(branches.size() == 4);
  // The two link measurements are the first written clbits; records should
  // step through 00, 01, 10, 11.
  for (std::size_t i = 0; i + 1 < branches.size(); ++i) {
    const auto& a = branches[i].clbits;
    const auto& b = branches[i + 1].clbits;
    const int ra = a[0] * 2 + a[1];
    const int rb = b[0] * 2 + b[1];
    CHECK(ra < rb);
  }
}

TEST_CASE("readout register is whatever no measurement consumed") {
  for (int n : {2, 3, 5}) {
    CAPTURE(n);
    const Circuit c = build_ghz(n, GhzVariant::Adaptive);
    const std::vector<int> r = readout_qubits(c);
    REQUIRE(static_cast<int>(r.size()) == n);
    for (int q = 0; q < n; ++q) CHECK(r[static_cast<std::size_t>(q)] == q);
  }
  const Circuit lin = build_ghz(4, GhzVariant::Linear);
  CHECK(readout_qubits(lin).size() == 4);
}

TEST_CASE("ideal sampling lands only on the two cat strings") {
  const Circuit c = build_ghz(3, GhzVariant::Adaptive);
  const ShotHistogram h = sample_ideal(c, 2000, 11);
  CHECK(h.shots == 2000);
  std::int64_t total = 0;
  for (const auto& [bits, count] : h.counts) {
    CHECK((bits == "000" || bits == "111"));
    total += count;
  }
  CHECK(total == 2000);
  REQUIRE(h.counts.count("000") == 1);
  REQUIRE(h.counts.count("111") == 1);
  CHECK(h.counts.at("000") > 800);
  CHECK(h.counts.at("111") > 800);

  const auto weights = h.hamming();
  REQUIRE(weights.size() == 2);
  CHECK(weights.at(0) == h.counts.at("000"));
  CHECK(weights.at(3) == h.counts.at("111"));
}

TEST_CASE("cascade sampling hits only weight-one strings and is seed-stable") {
  const Circuit w = build_w_cascade(5);
  const ShotHistogram a = sample_ideal(w, 400, 1);
  const ShotHistogram b = sample_ideal(w, 400, 1);
  const ShotHistogram d = sample_ideal(w, 400, 2);
  CHECK(a.counts == b.counts);
  CHECK(a.counts != d.counts);
  std::int64_t total = 0;
  for (const auto& [bits, count] : a.counts) {
    CHECK(std::count(bits.begin(), bits.end(), '1') == 1);
    total += count;
  }
  CHECK(total == 400);
}

TEST_CASE("noiseless error terms leave every shot clean") {
  const Circuit c = build_ghz(4, GhzVariant::Adaptive);
  const NoisyReport r = sample_noisy(c, ErrorTerms{}, 300, 5);
  CHECK(r.clean_shots == 300);
  CHECK(r.total_error_events == 0);
  CHECK(r.clean_fraction == 1.0);
  CHECK(r.histogram.shots == 300);
  for (const auto& [bits, count] : r.histogram.counts) {
    CHECK((bits == "0000" || bits == "1111"));
  }
}

TEST_CASE("noisy clean fraction tracks the counted success probability") {
  ErrorTerms t;
  t.p_s = 0.999;
  t.p_is = 0.9995;
  t.p_d = 0.99;
  t.p_id = 0.995;
  t.p_m = 0.98;
  t.p_im = 0.99;
  t.p_ic = 0.99;
  const Circuit c = build_ghz(5, GhzVariant::Linear);
  const double predicted = success_probability(count_exponents(schedule(c)), t);
  REQUIRE(predicted > 0.5);
  REQUIRE(predicted < 1.0);

  const std::int64_t shots = 4000;
  const NoisyReport r = sample_noisy(c, t, shots, 9);
  CHECK(r.histogram.shots == shots);
  CHECK(r.clean_fraction ==
        doctest::Approx(static_cast<double>(r.clean_shots) / static_cast<double>(shots)));
  const double sigma = std::sqrt(predicted * (1.0 - predicted) / static_cast<double>(shots));
  CHECK(std::abs(r.clean_fraction - predicted) <= 3.0 * sigma);
  CHECK(r.total_error_events >= shots - r.clean_shots);

  const NoisyReport again = sample_noisy(c, t, shots, 9);
  CHECK(again.clean_shots == r.clean_shots);
  CHECK(again.total_error_events == r.total_error_events);
  CHECK(again.histogram.counts == r.histogram.counts);
}

TEST_CASE("width and branch caps are enforced") {
  const Circuit c = build_ghz(3, GhzVariant::Adaptive);
  SimOptions narrow;
  narrow.qubit_cap = 4;
  CHECK_THROWS_AS((void)enumerate_branches(c, narrow), std::invalid_argument);
  CHECK_THROWS_AS((void)sample_ideal(c, 10, 1, narrow), std::invalid_argument);

  SimOptions few;
  few.max_branches = 3;
  CHECK_THROWS_AS((void)enumerate_branches(c, few), std::runtime_error);
  few.max_branches = 4;
  CHECK_NOTHROW((void)enumerate_branches(c, few));

  CHECK_THROWS_AS((void)sample_ideal(c, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)sample_noisy(c, ErrorTerms{}, 0, 1), std::invalid_argument);
}

TEST_CASE("parity filter report matches its closed forms") {
  const ParityFilterReport r2 = w_parity_filter_exact(2);
  CHECK(r2.acceptance == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r2.fidelity_w == doctest::Approx(1.0).epsilon(1e-12));

  const ParityFilterReport r4 = w_parity_filter_exact(4);
  CHECK(r4.acceptance == doctest::Approx(7.0 / 32.0).epsilon(1e-12));
  CHECK(r4.fidelity_w ==
        doctest::Approx((7.0 + 4.0 * std::sqrt(3.0)) / 14.0).epsilon(1e-12));

  for (int n : {2, 3, 4, 5}) {
    CAPTURE(n);
    const ParityFilterReport r = w_parity_filter_exact(n);
    CHECK(r.acceptance == doctest::Approx(w_parity_filter_acceptance(n)).epsilon(1e-10));
    CHECK(r.fidelity_w == doctest::Approx(w_parity_filter_fidelity(n)).epsilon(1e-10));
  }
}

TEST_CASE("histogram files round trip") {
  ShotHistogram h;
  h.counts["010"] = 3;
  h.counts["111"] = 5;
  h.shots = 8;
  const std::string path = "histogram_roundtrip_test.csv";
  write_histogram_csv(h, path);
  const ShotHistogram back = read_histogram_csv(path);
  CHECK(back.counts == h.counts);
  CHECK(back.shots == 8);
  std::remove(path.c_str());

  const std::string hamming_path = "hamming_roundtrip_test.csv";
  write_hamming_csv(h, hamming_path);
  CHECK_THROWS_AS((void)read_histogram_csv(hamming_path), std::runtime_error);
  std::remove(hamming_path.c_str());

  CHECK_THROWS_AS((void)read_histogram_csv("no_such_histogram_file.csv"), std::runtime_error);
}

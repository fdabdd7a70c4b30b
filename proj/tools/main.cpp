#include <CLI11.hpp>
#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stateprep/analytics.hpp"
#include "stateprep/calibration.hpp"
#include "stateprep/circuit_text.hpp"
#include "stateprep/decompose.hpp"
#include "stateprep/exponent_count.hpp"
#include "stateprep/exponents.hpp"
#include "stateprep/fanout.hpp"
#include "stateprep/ghz.hpp"
#include "stateprep/schedule.hpp"
#include "stateprep/simulate.hpp"
#include "stateprep/statevector.hpp"
#include "stateprep/w_state.hpp"

namespace {

using namespace stateprep;

GhzVariant parse_variant(const std::string& name) {
  static const std::map<std::string, GhzVariant> table = {
      {"all", GhzVariant::AllToAll},
      {"linear", GhzVariant::Linear},
      {"adaptive", GhzVariant::Adaptive},
      {"hybrid-all", GhzVariant::HybridAll},
      {"hybrid-linear", GhzVariant::HybridLinear},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    throw CLI::ValidationError("--variant", "unknown variant '" + name + "'");
  }
  return it->second;
}

CrossoverFamily parse_family(const std::string& name) {
  static const std::map<std::string, CrossoverFamily> table = {
      {"all", CrossoverFamily::AllVsAdaptive},
      {"linear", CrossoverFamily::LinearVsAdaptive},
      {"hybrid-all", CrossoverFamily::HybridAll},
      {"hybrid-linear", CrossoverFamily::HybridLinear},
      {"w", CrossoverFamily::WState},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    throw CLI::ValidationError("comparison", "unknown comparison '" + name + "'");
  }
  return it->second;
}

std::string format_exponents(const ExponentVector& e) {
  return fmt::format("s={} is={} d={} id={} m={} im={} ic={}", e.s, e.is, e.d, e.id, e.m, e.im,
                     e.ic);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return fmt::format("{}", r.numerator());
  return fmt::format("{}/{}", r.numerator(), r.denominator());
}

std::string format_rational_exponents(const RationalExponents& e) {
  return fmt::format("s={} is={} d={} id={} m={} im={} ic={}", format_rational(e.s),
                     format_rational(e.is), format_rational(e.d), format_rational(e.id),
                     format_rational(e.m), format_rational(e.im), format_rational(e.ic));
}

void print_gate_summary(const Circuit& c) {
  int n1 = 0, n2 = 0, nm = 0, nc = 0, ncond = 0;
  for (const GateOp& op : c.ops) {
    if (std::holds_alternative<Apply1Q>(op)) {
      ++n1;
    } else if (is_two_qubit(op)) {
      ++n2;
    } else if (std::holds_alternative<MeasureOp>(op)) {
      ++nm;
    } else if (std::holds_alternative<ClassicalComputeOp>(op)) {
      ++nc;
    } else {
      ++ncond;
    }
  }
  fmt::print("qubits {}  clbits {}\n", c.num_qubits, c.num_clbits);
  fmt::print("gates: 1q={} 2q={} measure={} classical={} conditional={}\n", n1, n2, nm, nc,
             ncond);
}

void write_svg_hamming(const ShotHistogram& hist, const std::string& path) {
  const auto weights = hist.hamming();
  std::int64_t peak = 1;
  int max_w = 0;
  for (const auto& [w, n] : weights) {
    peak = std::max(peak, n);
    max_w = std::max(max_w, w);
  }
  const int bar = 18;
  const int gap = 4;
  const int plot_h = 220;
  const int width = 50 + (max_w + 1) * (bar + gap) + 10;
  const int height = plot_h + 50;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      width, height, width, height);
  out << fmt::format(
      "<text x=\"6\" y=\"16\" font-size=\"12\" font-family=\"sans-serif\">shots: {}</text>\n",
      hist.shots);
  for (int w = 0; w <= max_w; ++w) {
    const auto it = weights.find(w);
    const std::int64_t n = it == weights.end() ? 0 : it->second;
    const int h = static_cast<int>(static_cast<double>(n) / static_cast<double>(peak) * plot_h);
    const int x = 50 + w * (bar + gap);
    const int y = 25 + plot_h - h;
    out << fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#4878a8\"/>\n", x, y, bar, h);
    out << fmt::format(
        "<text x=\"{}\" y=\"{}\" font-size=\"10\" font-family=\"sans-serif\" "
        "text-anchor=\"middle\">{}</text>\n",
        x + bar / 2, 25 + plot_h + 14, w);
    if (n > 0) {
      out << fmt::format(
          "<text x=\"{}\" y=\"{}\" font-size=\"9\" font-family=\"sans-serif\" "
          "text-anchor=\"middle\">{}</text>\n",
          x + bar / 2, y - 3, n);
    }
  }
  out << fmt::format(
      "<text x=\"{}\" y=\"{}\" font-size=\"11\" font-family=\"sans-serif\" "
      "text-anchor=\"middle\">hamming weight</text>\n",
      width / 2, 25 + plot_h + 32);
  out << "</svg>\n";
}

struct BuildArgs {
  std::string protocol;
  int n = 0;
  std::string variant = "all";
  int k = 1;
  std::string output;
  bool decompose = false;
};

Circuit build_protocol_circuit(const std::string& protocol, int n, const std::string& variant,
                               int k, bool decompose_rotations) {
  if (protocol == "ghz") return build_ghz(n, parse_variant(variant), k);
  if (protocol == "w") {
    Circuit c = build_w_cascade(n);
    return decompose_rotations ? decompose_controlled_rotations(c) : c;
  }
  if (protocol == "w-approx") return build_w_parity_filter(n);
  if (protocol == "fanout") return build_fanout(n);
  if (protocol == "parity") return build_parity(n);
  throw CLI::ValidationError("protocol", "unknown protocol '" + protocol + "'");
}

int run_build(const BuildArgs& a) {
  const Circuit c = build_protocol_circuit(a.protocol, a.n, a.variant, a.k, a.decompose);
  std::string path = a.output;
  if (path.empty()) {
    path = a.protocol == "ghz" ? fmt::format("ghz-{}-{}.circuit", a.variant, a.n)
                               : fmt::format("{}-{}.circuit", a.protocol, a.n);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_text(c);
  out.close();
  fmt::print("wrote {}\n", path);
  print_gate_summary(c);
  return 0;
}

struct AnalyzeArgs {
  std::string protocol;
  int n = 0;
  std::string cal_path;
  std::string variant;  // empty: report the standard set
  int k = 0;
  std::string csv_path;
  double t_classical_ns = -1.0;  // <0: default to the measurement time
  bool report_only = false;
  bool assume_easy = false;
};

struct VariantReport {
  std::string name;
  ExponentVector formula;
  ExponentVector oracle;
  bool match = false;
  double probability = -1.0;
  double runtime_ns = -1.0;
};

int run_analyze_ghz(const AnalyzeArgs& a) {
  std::vector<std::pair<GhzVariant, int>> wanted;
  if (!a.variant.empty()) {
    wanted.emplace_back(parse_variant(a.variant), a.k > 0 ? a.k : 1);
  } else {
    wanted = {{GhzVariant::AllToAll, 1}, {GhzVariant::Linear, 1}, {GhzVariant::Adaptive, 1}};
    if (a.k > 1) {
      wanted.emplace_back(GhzVariant::HybridAll, a.k);
      wanted.emplace_back(GhzVariant::HybridLinear, a.k);
    }
  }

  std::optional<Calibration> cal;
  ErrorTerms terms;
  if (!a.cal_path.empty()) {
    cal = load_calibration(a.cal_path);
    terms = terms_from_calibration(*cal);
    if (a.assume_easy) terms = simplified_terms(terms);
  }

  bool all_match = true;
  std::vector<VariantReport> reports;
  for (const auto& [v, k] : wanted) {
    VariantReport r;
    r.name = variant_name(v);
    if (k > 1) r.name += fmt::format(" k={}", k);
    r.formula = ghz_exponents(a.n, v, k);
    const Schedule sched = schedule(build_ghz(a.n, v, k));
    r.oracle = count_exponents(sched);
    r.match = r.formula == r.oracle;
    all_match = all_match && r.match;
    if (cal) {
      r.probability = success_probability(r.formula, terms);
      const double t_classical = a.t_classical_ns >= 0.0 ? a.t_classical_ns : cal->t_meas_ns;
      r.runtime_ns = runtime_estimate_ns(sched, durations_from_calibration(*cal, t_classical));
    }
    reports.push_back(r);

    fmt::print("ghz {} n={}\n", r.name, a.n);
    fmt::print("  formula {}\n", format_exponents(r.formula));
    fmt::print("  oracle  {}\n", format_exponents(r.oracle));
    fmt::print("  {}\n", r.match ? "oracle matches formula" : "MISMATCH formula != oracle");
    if (v == GhzVariant::Adaptive) {
      const ExponentVector alt = ghz_adaptive_alternate_exponents(a.n);
      fmt::print("  note: alternate idle accounting gives is={} (formula is={})\n", alt.is,
                 r.formula.is);
    }
    if (cal) {
      fmt::print("  success probability {:.2e}\n", r.probability);
      fmt::print("  runtime {:.2f} us\n", r.runtime_ns / 1000.0);
    }
  }

  if (!a.csv_path.empty()) {
    std::ofstream csv(a.csv_path);
    if (!csv) throw std::runtime_error("cannot write " + a.csv_path);
    csv << "variant,e_s,e_is,e_d,e_id,e_m,e_im,e_ic,probability,runtime_ns\n";
    for (const VariantReport& r : reports) {
      csv << fmt::format("{},{},{},{},{},{},{},{},{:.17g},{:.17g}\n", r.name, r.formula.s,
                         r.formula.is, r.formula.d, r.formula.id, r.formula.m, r.formula.im,
                         r.formula.ic, r.probability, r.runtime_ns);
    }
  }

  if (!all_match && !a.report_only) {
    fmt::print("exponent mismatch detected\n");
    return 1;
  }
  return 0;
}

int run_analyze_w(const AnalyzeArgs& a) {
  std::optional<Calibration> cal;
  ErrorTerms terms;
  if (!a.cal_path.empty()) {
    cal = load_calibration(a.cal_path);
    terms = terms_from_calibration(*cal);
    if (a.assume_easy) terms = simplified_terms(terms);
  }

  const ExponentVector formula = w_cascade_exponents(a.n);
  const Circuit decomposed = decompose_controlled_rotations(build_w_cascade(a.n));
  const Schedule sched = schedule(decomposed);
  const ExponentVector oracle = count_exponents(sched);
  const bool match = formula == oracle;

  fmt::print("w cascade n={}\n", a.n);
  fmt::print("  formula {}\n", format_exponents(formula));
  fmt::print("  oracle  {}\n", format_exponents(oracle));
  fmt::print("  {}\n", match ? "oracle matches formula" : "MISMATCH formula != oracle");
  fmt::print("  depth {}\n", sched.depth());
  double p_cascade = -1.0;
  if (cal) {
    p_cascade = success_probability(formula, terms);
    const double t_classical = a.t_classical_ns >= 0.0 ? a.t_classical_ns : cal->t_meas_ns;
    fmt::print("  success probability {:.2e}\n", p_cascade);
    fmt::print("  runtime {:.2f} us\n",
               runtime_estimate_ns(sched, durations_from_calibration(*cal, t_classical)) / 1000.0);
  }

  const bool power_of_two = a.n >= 2 && (a.n & (a.n - 1)) == 0;
  if (power_of_two) {
    const BlockComparison cmp = w_adaptive_comparison(a.n);
    fmt::print("w adaptive n={}\n", a.n);
    fmt::print("  direct   {}\n", format_exponents(cmp.direct));
    fmt::print("  composed {}\n", format_exponents(cmp.composed));
    if (cmp.exact_match()) {
      fmt::print("  composition matches\n");
    } else {
      fmt::print("  composition differs, direct - composed: {}\n", format_exponents(cmp.delta));
    }
    fmt::print("  approx   {}\n", format_rational_exponents(w_adaptive_approx_exponents(a.n)));
    if (cal) {
      const double p_adaptive = success_probability(cmp.direct, terms);
      fmt::print("  success probability {:.2e}\n", p_adaptive);
      if (p_cascade > 0.0) {
        fmt::print("  adaptive / cascade ratio {:.3e}\n", p_adaptive / p_cascade);
      }
    }
  } else {
    fmt::print("w adaptive n={}: needs a power-of-two register, skipped\n", a.n);
  }

  if (!match && !a.report_only) {
    fmt::print("exponent mismatch detected\n");
    return 1;
  }
  return 0;
}

struct CrossoverArgs {
  std::string comparison;
  int n = 0;
  int n_min = 0;
  int n_max = 0;
  int k = 0;
  std::string cal_path;
  double pd = -1.0;
  double pid = -1.0;
  std::int64_t cap = 4096;
};

int run_crossover(const CrossoverArgs& a) {
  const CrossoverFamily family = parse_family(a.comparison);
  const bool hybrid =
      family == CrossoverFamily::HybridAll || family == CrossoverFamily::HybridLinear;
  if (hybrid && a.k < 2) {
    throw CLI::ValidationError("--k", "hybrid comparisons need a block count of at least 2");
  }

  std::optional<ErrorTerms> terms;
  if (!a.cal_path.empty()) {
    terms = terms_from_calibration(load_calibration(a.cal_path));
  } else if (a.pd > 0.0 && a.pid > 0.0) {
    ErrorTerms t;
    t.p_d = a.pd;
    t.p_id = a.pid;
    terms = t;
  }

  fmt::print("{} crossover\n", family_name(family));

  int lo = a.n_min, hi = a.n_max;
  if (a.n > 0) lo = hi = a.n;
  if (lo == 0) lo = family == CrossoverFamily::WState ? 3 : 2;
  if (hi == 0) hi = lo;
  for (int n = lo; n <= hi; ++n) {
    if (hybrid && n % a.k != 0) continue;
    if (family == CrossoverFamily::WState && n < 3) continue;
    const double threshold = crossover_threshold(family, n, a.k);
    if (family == CrossoverFamily::WState) {
      fmt::print("n={} threshold {:.4f}\n", n, threshold);
    } else {
      fmt::print("n={} threshold {:.4f} ({})\n", n, threshold,
                 format_rational(crossover_threshold_exact(family, n, a.k)));
    }
  }

  if (terms) {
    fmt::print("noise exponent ratio ln(p_d)/ln(p_id) = {:.4f}\n", noise_exponent_ratio(*terms));
    if (!hybrid) {
      const auto min_n = min_n_adaptive_wins(family, *terms, a.cap);
      if (min_n) {
        fmt::print("adaptive wins from n = {} (cap {})\n", *min_n, a.cap);
      } else {
        fmt::print("adaptive wins for no n <= {}\n", a.cap);
      }
    }
  }
  return 0;
}

struct SimulateArgs {
  std::string protocol;
  int n = 0;
  std::string variant = "all";
  int k = 1;
  std::int64_t shots = 4096;
  std::uint64_t seed = 0;
  std::string cal_path;
  bool ideal = false;
  bool exact = false;
  std::string csv_path;
  std::string svg_path;
  bool hamming = false;
  int cap = 24;
  int max_branches = 4096;
  bool assume_easy = false;
};

void print_histogram(const ShotHistogram& hist, bool by_hamming) {
  if (by_hamming) {
    fmt::print("hamming-weight counts:\n");
    for (const auto& [w, n] : hist.hamming()) fmt::print("  {:>3} {}\n", w, n);
    return;
  }
  std::vector<std::pair<std::string, std::int64_t>> rows(hist.counts.begin(), hist.counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
    return l.second != r.second ? l.second > r.second : l.first < r.first;
  });
  const std::size_t shown = std::min<std::size_t>(rows.size(), 16);
  fmt::print("top readouts ({} distinct):\n", rows.size());
  for (std::size_t i = 0; i < shown; ++i) fmt::print("  {} {}\n", rows[i].first, rows[i].second);
}

int run_simulate_exact(const SimulateArgs& a, const Circuit& c) {
  const SimOptions opts{a.cap, a.max_branches};
  if (a.protocol == "w-approx") {
    const ParityFilterReport rep = w_parity_filter_exact(a.n, opts);
    fmt::print("exact acceptance {:.6f}\n", rep.acceptance);
    fmt::print("exact accepted-state fidelity with W: {:.6f}\n", rep.fidelity_w);
    return 0;
  }
  const std::vector<Branch> branches = enumerate_branches(c, opts);
  double total = 0.0;
  for (const Branch& b : branches) total += b.probability;
  fmt::print("branches {}  total probability {:.6f}\n", branches.size(), total);

  if (a.protocol == "ghz" || a.protocol == "w") {
    const SparseState target = a.protocol == "ghz" ? ghz_state(a.n, c.num_qubits)
                                                   : w_state(a.n, c.num_qubits);
    double min_f = 1.0, avg_f = 0.0;
    for (const Branch& b : branches) {
      const double f = fidelity(b.state, target);
      min_f = std::min(min_f, f);
      avg_f += b.probability * f;
    }
    fmt::print("fidelity with the target state: min {:.12f}, mean {:.12f}\n", min_f, avg_f);
  }
  return 0;
}

int run_simulate(const SimulateArgs& a) {
  const bool decompose = a.protocol == "w";
  const Circuit c = build_protocol_circuit(a.protocol, a.n, a.variant, a.k, decompose);
  if (a.exact) return run_simulate_exact(a, c);

  const SimOptions opts{a.cap, a.max_branches};
  ShotHistogram hist;
  if (!a.cal_path.empty() && !a.ideal) {
    ErrorTerms terms = terms_from_calibration(load_calibration(a.cal_path));
    if (a.assume_easy) terms = simplified_terms(terms);
    const NoisyReport rep = sample_noisy(c, terms, a.shots, a.seed, opts);
    hist = rep.histogram;
    const Schedule sched = schedule(c);
    fmt::print("scheduled depth {}\n", sched.depth());
    const double predicted = success_probability(count_exponents(sched), terms);
    const double sigma =
        std::sqrt(predicted * (1.0 - predicted) / static_cast<double>(a.shots));
    const double lo = predicted - 3.0 * sigma;
    const double hi = predicted + 3.0 * sigma;
    fmt::print("clean fraction {:.4f} ({}/{})\n", rep.clean_fraction, rep.clean_shots, a.shots);
    fmt::print("predicted success probability {:.4f}\n", predicted);
    fmt::print("binomial 3 sigma band [{:.4f}, {:.4f}] -> {}\n", lo, hi,
               rep.clean_fraction >= lo && rep.clean_fraction <= hi ? "within" : "OUTSIDE");
    fmt::print("error events {}\n", rep.total_error_events);
  } else {
    hist = sample_ideal(c, a.shots, a.seed, opts);
  }

  if (a.protocol == "w-approx") {
    std::int64_t odd = 0;
    for (const auto& [bits, n] : hist.counts) {
      if (std::count(bits.begin(), bits.end(), '1') % 2 == 1) odd += n;
    }
    const double rate = static_cast<double>(odd) / static_cast<double>(hist.shots);
    fmt::print("acceptance (odd readout parity) {:.4f} ({}/{})\n", rate, odd, hist.shots);
    const ParityFilterReport rep = w_parity_filter_exact(a.n, opts);
    fmt::print("exact acceptance {:.4f}\n", rep.acceptance);
  }

  print_histogram(hist, a.hamming);
  if (!a.csv_path.empty()) {
    if (a.hamming) {
      write_hamming_csv(hist, a.csv_path);
    } else {
      write_histogram_csv(hist, a.csv_path);
    }
    fmt::print("wrote {}\n", a.csv_path);
  }
  if (!a.svg_path.empty()) {
    write_svg_hamming(hist, a.svg_path);
    fmt::print("wrote {}\n", a.svg_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive state-preparation toolkit"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* cmd_build = app.add_subcommand("build", "build a circuit and write its text form");
  cmd_build->add_option("protocol", build_args.protocol, "ghz | w | w-approx | fanout | parity")
      ->required();
  cmd_build->add_option("--n", build_args.n, "register size")->required();
  cmd_build->add_option("--variant", build_args.variant, "ghz variant (default all)");
  cmd_build->add_option("--k", build_args.k, "block count for hybrid variants");
  cmd_build->add_option("-o,--output", build_args.output, "output path");
  cmd_build->add_flag("--decompose", build_args.decompose,
                      "expand controlled rotations into CNOTs and single-qubit gates");

  AnalyzeArgs analyze_args;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "closed-form exponents, counting oracle, probabilities");
  cmd_analyze->add_option("protocol", analyze_args.protocol, "ghz | w")->required();
  cmd_analyze->add_option("--n", analyze_args.n, "register size")->required();
  cmd_analyze->add_option("--cal", analyze_args.cal_path, "calibration JSON path");
  cmd_analyze->add_option("--variant", analyze_args.variant, "restrict to one ghz variant");
  cmd_analyze->add_option("--k", analyze_args.k, "block count, adds hybrid variants");
  cmd_analyze->add_option("--csv", analyze_args.csv_path, "write the table as CSV");
  cmd_analyze->add_option("--t-classical", analyze_args.t_classical_ns,
                          "classical feedforward duration in ns (default: measurement time)");
  cmd_analyze->add_flag("--report-only", analyze_args.report_only,
                        "downgrade formula/oracle mismatches to warnings");
  cmd_analyze->add_flag("--assume-easy", analyze_args.assume_easy,
                        "set p_s = p_is = 1, p_m = p_d, p_im = p_ic = p_id");

  CrossoverArgs crossover_args;
  CLI::App* cmd_crossover =
      app.add_subcommand("crossover", "thresholds where the adaptive preparation wins");
  cmd_crossover
      ->add_option("comparison", crossover_args.comparison,
                   "all | linear | hybrid-all | hybrid-linear | w")
      ->required();
  cmd_crossover->add_option("--n", crossover_args.n, "single register size");
  cmd_crossover->add_option("--n-min", crossover_args.n_min, "table start");
  cmd_crossover->add_option("--n-max", crossover_args.n_max, "table end");
  cmd_crossover->add_option("--k", crossover_args.k, "block count for hybrid comparisons");
  cmd_crossover->add_option("--cal", crossover_args.cal_path, "calibration JSON path");
  cmd_crossover->add_option("--pd", crossover_args.pd, "two-qubit success term");
  cmd_crossover->add_option("--pid", crossover_args.pid, "two-qubit-layer idle success term");
  cmd_crossover->add_option("--cap", crossover_args.cap, "scan limit for the minimum winning n");

  SimulateArgs simulate_args;
  CLI::App* cmd_simulate = app.add_subcommand("simulate", "statevector simulation");
  cmd_simulate
      ->add_option("protocol", simulate_args.protocol, "ghz | w | w-approx | fanout | parity")
      ->required();
  cmd_simulate->add_option("--n", simulate_args.n, "register size")->required();
  cmd_simulate->add_option("--variant", simulate_args.variant, "ghz variant (default all)");
  cmd_simulate->add_option("--k", simulate_args.k, "block count for hybrid variants");
  cmd_simulate->add_option("--shots", simulate_args.shots, "shot count (default 4096)");
  cmd_simulate->add_option("--seed", simulate_args.seed, "random seed (default 0)");
  cmd_simulate->add_option("--cal", simulate_args.cal_path,
                           "calibration JSON path, enables noise injection");
  cmd_simulate->add_flag("--ideal", simulate_args.ideal, "force noiseless sampling");
  cmd_simulate->add_flag("--exact", simulate_args.exact,
                         "enumerate all measurement branches instead of sampling");
  cmd_simulate->add_option("--csv", simulate_args.csv_path, "write the histogram as CSV");
  cmd_simulate->add_option("--svg", simulate_args.svg_path, "write a hamming-weight bar chart");
  cmd_simulate->add_flag("--hamming", simulate_args.hamming,
                         "print and export hamming weights instead of bitstrings");
  cmd_simulate->add_option("--cap", simulate_args.cap, "exact-simulation qubit cap (default 24)");
  cmd_simulate->add_option("--max-branches", simulate_args.max_branches,
                           "branch enumeration cap (default 4096)");
  cmd_simulate->add_flag("--assume-easy", simulate_args.assume_easy,
                         "set p_s = p_is = 1, p_m = p_d, p_im = p_ic = p_id");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_build->parsed()) return run_build(build_args);
    if (cmd_analyze->parsed()) {
      if (analyze_args.protocol == "ghz") return run_analyze_ghz(analyze_args);
      if (analyze_args.protocol == "w") return run_analyze_w(analyze_args);
      throw CLI::ValidationError("protocol", "unknown protocol '" + analyze_args.protocol + "'");
    }
    if (cmd_crossover->parsed()) return run_crossover(crossover_args);
    if (cmd_simulate->parsed()) return run_simulate(simulate_args);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}

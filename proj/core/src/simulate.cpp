#include "stateprep/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <variant>

#include "stateprep/classical_functions.hpp"
#include "stateprep/random.hpp"
#include "stateprep/schedule.hpp"
#include "stateprep/w_state.hpp"

namespace stateprep {

namespace {

constexpr double kBranchCutoff = 1e-12;

void check_cap(const Circuit& c, const SimOptions& opts) {
  if (c.num_qubits > opts.qubit_cap) {
    throw std::invalid_argument("circuit needs " + std::to_string(c.num_qubits) +
                                " qubits, above the exact-simulation cap of " +
                                std::to_string(opts.qubit_cap) + "; raise the cap to proceed");
  }
}

void apply_unitary_op(SparseState& s, const GateOp& op) {
  if (const auto* g = std::get_if<Apply1Q>(&op)) {
    const Matrix2 m = g->gate == Gate1Q::Generic ? g->matrix : gate_matrix(g->gate, g->angle);
    s.apply_1q(m, g->qubit);
  } else if (const auto* cx = std::get_if<ApplyCnot>(&op)) {
    s.apply_cnot(cx->control, cx->target);
  } else if (const auto* cr = std::get_if<ApplyControlledRotation>(&op)) {
    const Matrix2 m =
        gate_matrix(cr->axis == RotationAxis::Y ? Gate1Q::RY : Gate1Q::RZ, cr->angle);
    s.apply_controlled(m, cr->control, cr->target);
  } else {
    throw std::logic_error("operation is not a unitary gate");
  }
}

void run_classical(const ClassicalComputeOp& cc, std::vector<int>& clbits) {
  std::vector<int> in;
  in.reserve(cc.inputs.size());
  for (int b : cc.inputs) in.push_back(clbits[static_cast<std::size_t>(b)]);
  const std::vector<int> out = eval_classical(cc.fn, in);
  for (std::size_t i = 0; i < cc.outputs.size(); ++i) {
    clbits[static_cast<std::size_t>(cc.outputs[i])] = out[i];
  }
}

std::uint64_t sample_basis(const SparseState& s, RngStream& rng) {
  const auto entries = s.sorted_entries();
  const double u = rng.uniform();
  double acc = 0.0;
  for (const auto& [basis, amp] : entries) {
    acc += std::norm(amp);
    if (u < acc) return basis;
  }
  return entries.empty() ? 0 : entries.back().first;
}

std::string readout_string(std::uint64_t basis, const std::vector<int>& qubits) {
  std::string bits(qubits.size(), '0');
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (basis & (std::uint64_t{1} << qubits[i])) bits[i] = '1';
  }
  return bits;
}

struct PendingBranch {
  SparseState state;
  std::vector<int> clbits;
  double probability;
  std::size_t next_op;
};

// Execution order for per-shot sampling: program order, except that every
// measurement is hoisted to just after the last earlier operation touching
// its qubit. A measurement commutes with everything on other qubits, and
// moving it earlier keeps it behind the operations that read its bit, so the
// sampled distribution is unchanged while entanglement is collapsed as soon
// as the schedule allows. That keeps wide feedforward circuits cheap: their
// state never holds more than a few fused neighbourhoods at a time.
std::vector<std::size_t> sampling_order(const Circuit& c) {
  const std::size_t n = c.ops.size();
  std::vector<std::pair<std::int64_t, std::size_t>> keys(n);
  std::vector<std::int64_t> last_touch(static_cast<std::size_t>(c.num_qubits), -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<int> qs = touched_qubits(c.ops[i]);
    std::int64_t anchor = static_cast<std::int64_t>(i);
    if (std::holds_alternative<MeasureOp>(c.ops[i])) {
      anchor = -1;
      for (int q : qs) anchor = std::max(anchor, last_touch[static_cast<std::size_t>(q)]);
    }
    keys[i] = {anchor, i};
    for (int q : qs) last_touch[static_cast<std::size_t>(q)] = static_cast<std::int64_t>(i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = keys[i].second;
  return order;
}

// State held as a product of independent factors, one per connected group of
// qubits. Factors fuse when a two-qubit operation couples them and collapse
// under measurement, so the cost tracks the entanglement actually present
// rather than the register width. Keys inside each factor use global qubit
// positions, making the full-register basis sample the OR of the per-factor
// samples.
class FactoredState {
 public:
  explicit FactoredState(int num_qubits)
      : num_qubits_(num_qubits), parent_(static_cast<std::size_t>(num_qubits)) {
    std::iota(parent_.begin(), parent_.end(), 0);
    factors_.reserve(parent_.size());
    for (int q = 0; q < num_qubits; ++q) factors_.emplace(q, SparseState(num_qubits));
  }

  void apply_1q(const Matrix2& m, int q) { factors_.at(find(q)).apply_1q(m, q); }
  void apply_controlled(const Matrix2& m, int control, int target) {
    factors_.at(merge(control, target)).apply_controlled(m, control, target);
  }
  void apply_cnot(int control, int target) {
    factors_.at(merge(control, target)).apply_cnot(control, target);
  }
  void apply_2q(const Matrix4& m, int a, int b) { factors_.at(merge(a, b)).apply_2q(m, a, b); }

  [[nodiscard]] double probability_one(int q) { return factors_.at(find(q)).probability_one(q); }
  void project(int q, int outcome) { factors_.at(find(q)).project(q, outcome); }
  void project_and_clear(int q, int outcome) {
    factors_.at(find(q)).project_and_clear(q, outcome);
  }

  [[nodiscard]] std::uint64_t sample(RngStream& rng) const {
    std::vector<int> roots;
    roots.reserve(factors_.size());
    for (const auto& [root, state] : factors_) roots.push_back(root);
    std::sort(roots.begin(), roots.end());
    std::uint64_t basis = 0;
    for (int r : roots) basis |= sample_basis(factors_.at(r), rng);
    return basis;
  }

 private:
  int find(int q) {
    while (parent_[static_cast<std::size_t>(q)] != q) {
      const int up = parent_[static_cast<std::size_t>(q)];
      parent_[static_cast<std::size_t>(q)] = parent_[static_cast<std::size_t>(up)];
      q = parent_[static_cast<std::size_t>(q)];
    }
    return q;
  }

  // Tensors the two factors together and returns the surviving root.
  int merge(int a, int b) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return ra;
    const auto ea = factors_.at(ra).sorted_entries();
    const auto eb = factors_.at(rb).sorted_entries();
    SparseState joined(num_qubits_);
    joined.set_amplitude(0, {0.0, 0.0});
    for (const auto& [ka, va] : ea) {
      for (const auto& [kb, vb] : eb) joined.set_amplitude(ka | kb, va * vb);
    }
    factors_.at(ra) = std::move(joined);
    factors_.erase(rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    return ra;
  }

  int num_qubits_;
  std::vector<int> parent_;
  std::unordered_map<int, SparseState> factors_;
};

// Everything one shot of the worst-case error model decided up front: which
// scheduled slots fail and the noise drawn for them. Failure draws depend
// only on the schedule, never on the state, so they can be made in schedule
// order while the state is evolved in sampling order.
struct NoisePlan {
  std::vector<char> fail;    ///< per op index: slot replaced by noise
  std::vector<char> flip;    ///< per op index: measurement records the opposite bit
  std::vector<Matrix2> kick_1q;  ///< valid where fail is set on a one-qubit slot
  std::vector<Matrix4> kick_2q;  ///< valid where fail is set on a two-qubit slot
  /// Idle-slot noise, keyed by the op it must precede on its qubit.
  std::unordered_map<std::size_t, std::vector<std::pair<int, Matrix2>>> idle_kicks;
  /// Idle-slot noise on qubits with no later operation.
  std::vector<std::pair<int, Matrix2>> final_kicks;
  std::int64_t events = 0;

  explicit NoisePlan(std::size_t num_ops)
      : fail(num_ops, 0), flip(num_ops, 0), kick_1q(num_ops), kick_2q(num_ops) {}

  void reset() {
    std::fill(fail.begin(), fail.end(), 0);
    std::fill(flip.begin(), flip.end(), 0);
    idle_kicks.clear();
    final_kicks.clear();
    events = 0;
  }
};

// For qubit q idling in layer `layer_index`, the op index of q's next action,
// if any. Noise from the idle slot is applied just before that op, which sits
// at the same point of q's own timeline in any commuting execution order.
class IdleAttachment {
 public:
  IdleAttachment(const Circuit& c, const Schedule& sched)
      : ops_by_qubit_(static_cast<std::size_t>(c.num_qubits)) {
    for (std::size_t li = 0; li < sched.layers.size(); ++li) {
      for (std::size_t idx : sched.layers[li].ops) {
        for (int q : touched_qubits(c.ops[idx])) {
          ops_by_qubit_[static_cast<std::size_t>(q)].emplace_back(li, idx);
        }
      }
    }
  }

  [[nodiscard]] std::optional<std::size_t> next_op(int q, std::size_t layer_index) const {
    const auto& ops = ops_by_qubit_[static_cast<std::size_t>(q)];
    const auto it = std::upper_bound(
        ops.begin(), ops.end(), layer_index,
        [](std::size_t li, const std::pair<std::size_t, std::size_t>& entry) {
          return li < entry.first;
        });
    if (it == ops.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ops_by_qubit_;
};

// Walks the schedule in layer order, drawing one failure per charged slot at
// that slot's rate, mirroring the counting oracle site for site.
void draw_noise(const Circuit& c, const Schedule& sched, const IdleAttachment& attach,
                const ErrorTerms& terms, RngStream& rng, NoisePlan& plan) {
  const auto fails = [&](double term) {
    if (term >= 1.0) return false;
    const bool f = rng.uniform() >= term;
    if (f) ++plan.events;
    return f;
  };
  const auto idle_round = [&](const std::vector<int>& qubits, double term,
                              std::size_t layer_index) {
    for (int q : qubits) {
      if (!fails(term)) continue;
      const Matrix2 kick = haar_random_1q(rng);
      if (const auto next = attach.next_op(q, layer_index)) {
        plan.idle_kicks[*next].emplace_back(q, kick);
      } else {
        plan.final_kicks.emplace_back(q, kick);
      }
    }
  };

  for (std::size_t li = 0; li < sched.layers.size(); ++li) {
    const Layer& layer = sched.layers[li];
    switch (layer.cls) {
      case LayerClass::Single: {
        if (!layer.conditional) {
          for (std::size_t idx : layer.ops) {
            if (fails(terms.p_s)) {
              plan.fail[idx] = 1;
              plan.kick_1q[idx] = haar_random_1q(rng);
            }
          }
          idle_round(layer.idle, terms.p_is, li);
          break;
        }
        // Conditional layer: the worst-case accounting charges the first
        // floor(targets/2) targets (by qubit index) as applied gates and
        // the rest as idle, independent of the branch actually taken.
        std::vector<std::pair<int, std::size_t>> targets;
        targets.reserve(layer.ops.size());
        for (std::size_t idx : layer.ops) {
          targets.emplace_back(std::get<CondOp>(c.ops[idx]).inner.qubit, idx);
        }
        std::sort(targets.begin(), targets.end());
        const std::size_t applied = targets.size() / 2;
        for (std::size_t i = 0; i < targets.size(); ++i) {
          const std::size_t idx = targets[i].second;
          if (fails(i < applied ? terms.p_s : terms.p_is)) {
            plan.fail[idx] = 1;
            plan.kick_1q[idx] = haar_random_1q(rng);
          }
        }
        idle_round(layer.idle, terms.p_is, li);
        break;
      }
      case LayerClass::Double: {
        for (std::size_t idx : layer.ops) {
          if (fails(terms.p_d)) {
            plan.fail[idx] = 1;
            plan.kick_2q[idx] = haar_random_2q(rng);
          }
        }
        idle_round(layer.idle, terms.p_id, li);
        break;
      }
      case LayerClass::Measure: {
        for (std::size_t idx : layer.ops) {
          if (fails(terms.p_m)) plan.flip[idx] = 1;
        }
        idle_round(layer.idle, terms.p_im, li);
        break;
      }
      case LayerClass::Classical: {
        idle_round(layer.idle, terms.p_ic, li);
        break;
      }
    }
  }
}

void apply_1q_to(FactoredState& state, const Apply1Q& g) {
  const Matrix2 m = g.gate == Gate1Q::Generic ? g.matrix : gate_matrix(g.gate, g.angle);
  state.apply_1q(m, g.qubit);
}

// Runs one shot over the sampling order, consulting the plan (when given)
// for slot failures, and returns the sampled full-register basis state.
std::uint64_t run_shot(const Circuit& c, const std::vector<std::size_t>& order,
                       const NoisePlan* plan, RngStream& rng, std::vector<int>& clbits) {
  FactoredState state(c.num_qubits);
  std::fill(clbits.begin(), clbits.end(), -1);
  for (std::size_t idx : order) {
    if (plan) {
      const auto kicks = plan->idle_kicks.find(idx);
      if (kicks != plan->idle_kicks.end()) {
        for (const auto& [q, m] : kicks->second) state.apply_1q(m, q);
      }
    }
    const GateOp& op = c.ops[idx];
    if (const auto* mz = std::get_if<MeasureOp>(&op)) {
      const double p1 = state.probability_one(mz->qubit);
      const int outcome = rng.uniform() < p1 ? 1 : 0;
      if (mz->consume) {
        state.project_and_clear(mz->qubit, outcome);
      } else {
        state.project(mz->qubit, outcome);
      }
      const int recorded = (plan && plan->flip[idx]) ? 1 - outcome : outcome;
      clbits[static_cast<std::size_t>(mz->clbit)] = recorded;
    } else if (const auto* cc = std::get_if<ClassicalComputeOp>(&op)) {
      run_classical(*cc, clbits);
    } else if (const auto* cd = std::get_if<CondOp>(&op)) {
      if (plan && plan->fail[idx]) {
        state.apply_1q(plan->kick_1q[idx], cd->inner.qubit);
      } else if (clbits[static_cast<std::size_t>(cd->clbit)] == 1) {
        apply_1q_to(state, cd->inner);
      }
    } else if (plan && plan->fail[idx]) {
      if (is_two_qubit(op)) {
        const std::vector<int> qs = touched_qubits(op);
        state.apply_2q(plan->kick_2q[idx], qs[0], qs[1]);
      } else {
        state.apply_1q(plan->kick_1q[idx], std::get<Apply1Q>(op).qubit);
      }
    } else if (const auto* g = std::get_if<Apply1Q>(&op)) {
      apply_1q_to(state, *g);
    } else if (const auto* cx = std::get_if<ApplyCnot>(&op)) {
      state.apply_cnot(cx->control, cx->target);
    } else {
      const auto& cr = std::get<ApplyControlledRotation>(op);
      const Matrix2 m =
          gate_matrix(cr.axis == RotationAxis::Y ? Gate1Q::RY : Gate1Q::RZ, cr.angle);
      state.apply_controlled(m, cr.control, cr.target);
    }
  }
  if (plan) {
    for (const auto& [q, m] : plan->final_kicks) state.apply_1q(m, q);
  }
  return state.sample(rng);
}

}  // namespace

std::vector<Branch> enumerate_branches(const Circuit& c, const SimOptions& opts) {
  validate(c);
  check_cap(c, opts);
  std::vector<Branch> leaves;
  std::vector<PendingBranch> stack;
  stack.push_back(
      {SparseState(c.num_qubits), std::vector<int>(static_cast<std::size_t>(c.num_clbits), -1),
       1.0, 0});

  while (!stack.empty()) {
    PendingBranch cur = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = cur.next_op; i < c.ops.size(); ++i) {
      const GateOp& op = c.ops[i];
      if (const auto* mz = std::get_if<MeasureOp>(&op)) {
        const double p1 = cur.state.probability_one(mz->qubit);
        const double p0 = 1.0 - p1;
        const bool take0 = p0 > kBranchCutoff;
        const bool take1 = p1 > kBranchCutoff;
        if (take0 && take1) {
          if (static_cast<int>(leaves.size() + stack.size() + 2) > opts.max_branches) {
            throw std::runtime_error("measurement branch count exceeds the enumeration cap of " +
                                     std::to_string(opts.max_branches));
          }
          PendingBranch other{cur.state, cur.clbits, cur.probability * p1, i + 1};
          if (mz->consume) {
            other.state.project_and_clear(mz->qubit, 1);
          } else {
            other.state.project(mz->qubit, 1);
          }
          other.clbits[static_cast<std::size_t>(mz->clbit)] = 1;
          stack.push_back(std::move(other));
        }
        const int outcome = take0 ? 0 : 1;
        cur.probability *= take0 ? p0 : p1;
        if (mz->consume) {
          cur.state.project_and_clear(mz->qubit, outcome);
        } else {
          cur.state.project(mz->qubit, outcome);
        }
        cur.clbits[static_cast<std::size_t>(mz->clbit)] = outcome;
      } else if (const auto* cc = std::get_if<ClassicalComputeOp>(&op)) {
        run_classical(*cc, cur.clbits);
      } else if (const auto* cd = std::get_if<CondOp>(&op)) {
        if (cur.clbits[static_cast<std::size_t>(cd->clbit)] == 1) {
          apply_unitary_op(cur.state, GateOp{cd->inner});
        }
      } else {
        apply_unitary_op(cur.state, op);
      }
    }
    leaves.push_back(Branch{cur.probability, std::move(cur.state), std::move(cur.clbits)});
  }

  // Depth-first, parking outcome 1 and continuing with outcome 0, completes
  // leaves in increasing measurement-record order already.
  return leaves;
}

std::vector<int> readout_qubits(const Circuit& c) {
  std::set<int> consumed;
  for (const GateOp& op : c.ops) {
    if (const auto* mz = std::get_if<MeasureOp>(&op)) {
      if (mz->consume) consumed.insert(mz->qubit);
    }
  }
  std::vector<int> out;
  for (int q = 0; q < c.num_qubits; ++q) {
    if (!consumed.count(q)) out.push_back(q);
  }
  return out;
}

std::map<int, std::int64_t> ShotHistogram::hamming() const {
  std::map<int, std::int64_t> out;
  for (const auto& [bits, n] : counts) {
    const int w = static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
    out[w] += n;
  }
  return out;
}

ShotHistogram sample_ideal(const Circuit& c, std::int64_t shots, std::uint64_t seed,
                           const SimOptions& opts) {
  validate(c);
  check_cap(c, opts);
  if (shots < 1) throw std::invalid_argument("need at least one shot");
  const std::vector<int> readout = readout_qubits(c);
  const std::vector<std::size_t> order = sampling_order(c);
  ShotHistogram hist;
  hist.shots = shots;
  std::vector<int> clbits(static_cast<std::size_t>(c.num_clbits), -1);
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    RngStream rng(derive_seed(seed, static_cast<std::uint64_t>(shot)));
    const std::uint64_t basis = run_shot(c, order, nullptr, rng, clbits);
    ++hist.counts[readout_string(basis, readout)];
  }
  return hist;
}

NoisyReport sample_noisy(const Circuit& c, const ErrorTerms& terms, std::int64_t shots,
                         std::uint64_t seed, const SimOptions& opts) {
  check_cap(c, opts);
  if (shots < 1) throw std::invalid_argument("need at least one shot");
  const Schedule sched = schedule(c);
  const IdleAttachment attach(c, sched);
  const std::vector<int> readout = readout_qubits(c);
  const std::vector<std::size_t> order = sampling_order(c);

  NoisyReport report;
  report.histogram.shots = shots;

  NoisePlan plan(c.ops.size());
  std::vector<int> clbits(static_cast<std::size_t>(c.num_clbits), -1);
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    RngStream rng(derive_seed(seed, static_cast<std::uint64_t>(shot)));
    plan.reset();
    draw_noise(c, sched, attach, terms, rng, plan);
    const std::uint64_t basis = run_shot(c, order, &plan, rng, clbits);
    if (plan.events == 0) ++report.clean_shots;
    report.total_error_events += plan.events;
    ++report.histogram.counts[readout_string(basis, readout)];
  }

  report.clean_fraction =
      static_cast<double>(report.clean_shots) / static_cast<double>(shots);
  return report;
}

ParityFilterReport w_parity_filter_exact(int n, const SimOptions& opts) {
  const Circuit c = build_w_parity_filter(n);
  const std::vector<Branch> branches = enumerate_branches(c, opts);
  const std::size_t accept_bit = static_cast<std::size_t>(c.num_clbits) - 1;

  SparseState target(c.num_qubits);
  target.set_amplitude(0, {0.0, 0.0});
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  for (int q = 1; q <= n; ++q) target.set_amplitude(std::uint64_t{1} << q, {r, 0.0});

  ParityFilterReport rep;
  double weighted_fidelity = 0.0;
  for (const Branch& b : branches) {
    if (b.clbits[accept_bit] != 1) continue;
    rep.acceptance += b.probability;
    weighted_fidelity += b.probability * fidelity(b.state, target);
  }
  if (rep.acceptance > 0.0) rep.fidelity_w = weighted_fidelity / rep.acceptance;
  return rep;
}

void write_histogram_csv(const ShotHistogram& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "bitstring,count\n";
  for (const auto& [bits, n] : h.counts) out << bits << "," << n << "\n";
}

void write_hamming_csv(const ShotHistogram& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "hamming_weight,count\n";
  for (const auto& [w, n] : h.hamming()) out << w << "," << n << "\n";
}

ShotHistogram read_histogram_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line) || line != "bitstring,count") {
    throw std::runtime_error(path + ": expected header 'bitstring,count'");
  }
  ShotHistogram h;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path + ": malformed row: " + line);
    const std::string bits = line.substr(0, comma);
    if (bits.find_first_not_of("01") != std::string::npos) {
      throw std::runtime_error(path + ": bitstring must be over {0,1}: " + bits);
    }
    const std::int64_t count = std::stoll(line.substr(comma + 1));
    h.counts[bits] = count;
    h.shots += count;
  }
  return h;
}

}  // namespace stateprep

#include "stateprep/schedule.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stateprep {

namespace {

enum class OpBucket { SinglePlain, SingleCond, Double, Measure, Classical };

OpBucket bucket_of(const GateOp& op) {
  struct Visitor {
    OpBucket operator()(const Apply1Q&) const { return OpBucket::SinglePlain; }
    OpBucket operator()(const ApplyCnot&) const { return OpBucket::Double; }
    OpBucket operator()(const ApplyControlledRotation&) const { return OpBucket::Double; }
    OpBucket operator()(const MeasureOp&) const { return OpBucket::Measure; }
    OpBucket operator()(const ClassicalComputeOp&) const { return OpBucket::Classical; }
    OpBucket operator()(const CondOp&) const { return OpBucket::SingleCond; }
  };
  return std::visit(Visitor{}, op);
}

struct ClbitAccess {
  std::vector<int> reads;
  std::vector<int> writes;
};

ClbitAccess clbit_access(const GateOp& op) {
  ClbitAccess a;
  if (const auto* meas = std::get_if<MeasureOp>(&op)) {
    a.writes.push_back(meas->clbit);
  } else if (const auto* cc = std::get_if<ClassicalComputeOp>(&op)) {
    a.reads = cc->inputs;
    a.writes = cc->outputs;
  } else if (const auto* cnd = std::get_if<CondOp>(&op)) {
    a.reads.push_back(cnd->clbit);
  }
  return a;
}

}  // namespace

Schedule schedule(const Circuit& c, const ScheduleOptions& options) {
  validate(c);
  const std::size_t n_ops = c.ops.size();

  // Dependency edges: program order per qubit, write-read / read-write /
  // write-write order per classical bit.
  std::vector<std::vector<std::size_t>> successors(n_ops);
  std::vector<int> remaining(n_ops, 0);
  {
    std::vector<std::set<std::size_t>> dedup(n_ops);
    auto add_edge = [&](std::size_t from, std::size_t to) {
      if (dedup[from].insert(to).second) {
        successors[from].push_back(to);
        ++remaining[to];
      }
    };

    std::map<int, std::size_t> last_on_qubit;
    std::map<int, std::size_t> last_writer;
    std::map<int, std::vector<std::size_t>> readers_since_write;

    for (std::size_t i = 0; i < n_ops; ++i) {
      for (int q : touched_qubits(c.ops[i])) {
        if (auto it = last_on_qubit.find(q); it != last_on_qubit.end()) add_edge(it->second, i);
        last_on_qubit[q] = i;
      }
      const ClbitAccess access = clbit_access(c.ops[i]);
      for (int bit : access.reads) {
        if (auto it = last_writer.find(bit); it != last_writer.end()) add_edge(it->second, i);
        readers_since_write[bit].push_back(i);
      }
      for (int bit : access.writes) {
        if (auto it = last_writer.find(bit); it != last_writer.end()) add_edge(it->second, i);
        for (std::size_t r : readers_since_write[bit]) add_edge(r, i);
        readers_since_write[bit].clear();
        last_writer[bit] = i;
      }
    }
  }

  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n_ops; ++i) {
    if (remaining[i] == 0) ready.insert(i);
  }

  std::set<int> live;
  for (int q = 0; q < c.num_qubits; ++q) live.insert(q);

  Schedule out;
  out.circuit = c;
  std::size_t emitted = 0;

  while (emitted < n_ops) {
    if (ready.empty()) throw std::logic_error("dependency cycle in circuit");

    constexpr OpBucket kPriority[] = {OpBucket::SinglePlain, OpBucket::SingleCond, OpBucket::Double,
                                      OpBucket::Measure, OpBucket::Classical};
    OpBucket chosen = OpBucket::Classical;
    bool found = false;
    for (OpBucket b : kPriority) {
      for (std::size_t i : ready) {
        if (bucket_of(c.ops[i]) == b) {
          chosen = b;
          found = true;
          break;
        }
      }
      if (found) break;
    }

    Layer layer;
    switch (chosen) {
      case OpBucket::SinglePlain:
      case OpBucket::SingleCond:
        layer.cls = LayerClass::Single;
        layer.conditional = (chosen == OpBucket::SingleCond);
        break;
      case OpBucket::Double:
        layer.cls = LayerClass::Double;
        break;
      case OpBucket::Measure:
        layer.cls = LayerClass::Measure;
        break;
      case OpBucket::Classical:
        layer.cls = LayerClass::Classical;
        break;
    }

    std::set<int> busy;
    std::vector<std::size_t> taken;
    for (std::size_t i : ready) {
      if (bucket_of(c.ops[i]) != chosen) continue;
      if (layer.cls == LayerClass::Double && options.max_parallel_2q > 0 &&
          static_cast<int>(taken.size()) >= options.max_parallel_2q) {
        break;
      }
      const std::vector<int> qubits = touched_qubits(c.ops[i]);
      const bool collides =
          std::any_of(qubits.begin(), qubits.end(), [&](int q) { return busy.count(q) != 0; });
      if (collides) continue;
      busy.insert(qubits.begin(), qubits.end());
      taken.push_back(i);
    }

    layer.ops = taken;
    layer.active.assign(busy.begin(), busy.end());
    for (int q : live) {
      if (busy.count(q) == 0) layer.idle.push_back(q);
    }

    for (std::size_t i : taken) {
      ready.erase(i);
      for (std::size_t succ : successors[i]) {
        if (--remaining[succ] == 0) ready.insert(succ);
      }
      if (const auto* meas = std::get_if<MeasureOp>(&c.ops[i]); meas && meas->consume) {
        live.erase(meas->qubit);
      }
    }
    emitted += taken.size();
    out.layers.push_back(std::move(layer));
  }

  return out;
}

}  // namespace stateprep

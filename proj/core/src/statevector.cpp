#include "stateprep/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stateprep {

namespace {

constexpr double kDropThreshold = 1e-30;  // on |amp|^2

}  // namespace

SparseState::SparseState(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 63) {
    throw std::invalid_argument("qubit count must be in [1, 63]");
  }
  amps_.emplace(0, Amplitude{1.0, 0.0});
}

void SparseState::apply_1q(const Matrix2& m, int q) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  std::unordered_map<std::uint64_t, Amplitude> next;
  next.reserve(amps_.size() * 2);
  for (const auto& [x, a] : amps_) {
    const int bit = (x & mask) ? 1 : 0;
    const Amplitude to0 = (bit ? m.m01 : m.m00) * a;
    const Amplitude to1 = (bit ? m.m11 : m.m10) * a;
    if (std::norm(to0) > 0.0) next[x & ~mask] += to0;
    if (std::norm(to1) > 0.0) next[x | mask] += to1;
  }
  for (auto it = next.begin(); it != next.end();) {
    it = std::norm(it->second) < kDropThreshold ? next.erase(it) : std::next(it);
  }
  amps_ = std::move(next);
}

void SparseState::apply_controlled(const Matrix2& m, int control, int target) {
  const std::uint64_t cmask = std::uint64_t{1} << control;
  const std::uint64_t tmask = std::uint64_t{1} << target;
  std::unordered_map<std::uint64_t, Amplitude> next;
  next.reserve(amps_.size() * 2);
  for (const auto& [x, a] : amps_) {
    if (!(x & cmask)) {
      next[x] += a;
      continue;
    }
    const int bit = (x & tmask) ? 1 : 0;
    const Amplitude to0 = (bit ? m.m01 : m.m00) * a;
    const Amplitude to1 = (bit ? m.m11 : m.m10) * a;
    if (std::norm(to0) > 0.0) next[x & ~tmask] += to0;
    if (std::norm(to1) > 0.0) next[x | tmask] += to1;
  }
  for (auto it = next.begin(); it != next.end();) {
    it = std::norm(it->second) < kDropThreshold ? next.erase(it) : std::next(it);
  }
  amps_ = std::move(next);
}

void SparseState::apply_cnot(int control, int target) {
  const std::uint64_t cmask = std::uint64_t{1} << control;
  const std::uint64_t tmask = std::uint64_t{1} << target;
  std::unordered_map<std::uint64_t, Amplitude> next;
  next.reserve(amps_.size());
  for (const auto& [x, a] : amps_) {
    next[(x & cmask) ? (x ^ tmask) : x] = a;
  }
  amps_ = std::move(next);
}

void SparseState::apply_2q(const Matrix4& m, int a, int b) {
  const std::uint64_t amask = std::uint64_t{1} << a;
  const std::uint64_t bmask = std::uint64_t{1} << b;
  std::unordered_map<std::uint64_t, Amplitude> next;
  next.reserve(amps_.size() * 4);
  for (const auto& [x, amp] : amps_) {
    const int in = ((x & amask) ? 2 : 0) | ((x & bmask) ? 1 : 0);
    const std::uint64_t base = x & ~amask & ~bmask;
    for (int out = 0; out < 4; ++out) {
      const Amplitude term = m[static_cast<std::size_t>(out * 4 + in)] * amp;
      if (std::norm(term) == 0.0) continue;
      std::uint64_t y = base;
      if (out & 2) y |= amask;
      if (out & 1) y |= bmask;
      next[y] += term;
    }
  }
  for (auto it = next.begin(); it != next.end();) {
    it = std::norm(it->second) < kDropThreshold ? next.erase(it) : std::next(it);
  }
  amps_ = std::move(next);
}

double SparseState::probability_one(int q) const {
  const std::uint64_t mask = std::uint64_t{1} << q;
  double p = 0.0;
  for (const auto& [x, a] : amps_) {
    if (x & mask) p += std::norm(a);
  }
  return p;
}

void SparseState::project(int q, int outcome) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  double kept = 0.0;
  for (auto it = amps_.begin(); it != amps_.end();) {
    const bool one = (it->first & mask) != 0;
    if (one == (outcome != 0)) {
      kept += std::norm(it->second);
      ++it;
    } else {
      it = amps_.erase(it);
    }
  }
  if (kept <= 0.0) throw std::logic_error("projection onto a zero-probability outcome");
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& [x, a] : amps_) a *= scale;
}

void SparseState::project_and_clear(int q, int outcome) {
  project(q, outcome);
  if (outcome != 0) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    std::unordered_map<std::uint64_t, Amplitude> next;
    next.reserve(amps_.size());
    for (const auto& [x, a] : amps_) next[x & ~mask] = a;
    amps_ = std::move(next);
  }
}

double SparseState::norm_sq() const {
  double p = 0.0;
  for (const auto& [x, a] : amps_) p += std::norm(a);
  return p;
}

Amplitude SparseState::amplitude(std::uint64_t basis) const {
  const auto it = amps_.find(basis);
  return it == amps_.end() ? Amplitude{} : it->second;
}

void SparseState::set_amplitude(std::uint64_t basis, Amplitude a) {
  if (std::norm(a) == 0.0) {
    amps_.erase(basis);
  } else {
    amps_[basis] = a;
  }
}

Amplitude SparseState::inner(const SparseState& other) const {
  // <this|other>, iterating over the smaller support.
  if (other.amps_.size() < amps_.size()) return std::conj(other.inner(*this));
  Amplitude sum{};
  for (const auto& [x, a] : amps_) {
    const auto it = other.amps_.find(x);
    if (it != other.amps_.end()) sum += std::conj(a) * it->second;
  }
  return sum;
}

std::vector<std::pair<std::uint64_t, Amplitude>> SparseState::sorted_entries(
    double min_prob) const {
  std::vector<std::pair<std::uint64_t, Amplitude>> out;
  out.reserve(amps_.size());
  for (const auto& [x, a] : amps_) {
    if (std::norm(a) >= min_prob) out.emplace_back(x, a);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

double fidelity(const SparseState& a, const SparseState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("fidelity needs states on the same register");
  }
  return std::norm(a.inner(b));
}

SparseState ghz_state(int n, int total_qubits) {
  if (n < 1 || n > total_qubits) throw std::invalid_argument("bad GHZ width");
  SparseState s(total_qubits);
  const double r = 1.0 / std::sqrt(2.0);
  s.set_amplitude(0, {r, 0.0});
  s.set_amplitude((std::uint64_t{1} << n) - 1, {r, 0.0});
  return s;
}

SparseState w_state(int n, int total_qubits) {
  if (n < 1 || n > total_qubits) throw std::invalid_argument("bad W width");
  SparseState s(total_qubits);
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  s.set_amplitude(0, {0.0, 0.0});
  for (int q = 0; q < n; ++q) s.set_amplitude(std::uint64_t{1} << q, {r, 0.0});
  return s;
}

}  // namespace stateprep

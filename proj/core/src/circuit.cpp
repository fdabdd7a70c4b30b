#include "stateprep/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "stateprep/classical_functions.hpp"

namespace stateprep {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

}  // namespace

Matrix2 gate_matrix(Gate1Q gate, double angle) {
  switch (gate) {
    case Gate1Q::H:
      return Matrix2{{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, {-kInvSqrt2, 0.0}};
    case Gate1Q::X:
      return Matrix2{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
    case Gate1Q::Z:
      return Matrix2{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};
    case Gate1Q::RY: {
      const double c = std::cos(angle / 2.0);
      const double s = std::sin(angle / 2.0);
      return Matrix2{{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}};
    }
    case Gate1Q::RZ: {
      const double c = std::cos(angle / 2.0);
      const double s = std::sin(angle / 2.0);
      return Matrix2{{c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s}};
    }
    case Gate1Q::Generic:
      break;
  }
  throw std::invalid_argument("generic gates carry their own matrix");
}

std::vector<int> touched_qubits(const GateOp& op) {
  struct Visitor {
    std::vector<int> operator()(const Apply1Q& g) const { return {g.qubit}; }
    std::vector<int> operator()(const ApplyCnot& g) const { return {g.control, g.target}; }
    std::vector<int> operator()(const ApplyControlledRotation& g) const {
      return {g.control, g.target};
    }
    std::vector<int> operator()(const MeasureOp& g) const { return {g.qubit}; }
    std::vector<int> operator()(const ClassicalComputeOp&) const { return {}; }
    std::vector<int> operator()(const CondOp& g) const { return {g.inner.qubit}; }
  };
  return std::visit(Visitor{}, op);
}

bool is_two_qubit(const GateOp& op) {
  return std::holds_alternative<ApplyCnot>(op) || std::holds_alternative<ApplyControlledRotation>(op);
}

namespace {

void check_qubit(int q, int num_qubits, const std::vector<bool>& consumed, std::size_t op_index) {
  if (q < 0 || q >= num_qubits) {
    throw std::invalid_argument("op " + std::to_string(op_index) + ": qubit " + std::to_string(q) +
                                " out of range");
  }
  if (consumed[static_cast<std::size_t>(q)]) {
    throw std::invalid_argument("op " + std::to_string(op_index) + ": qubit " + std::to_string(q) +
                                " was consumed by an earlier measurement");
  }
}

void check_clbit(int c, int num_clbits, std::size_t op_index) {
  if (c < 0 || c >= num_clbits) {
    throw std::invalid_argument("op " + std::to_string(op_index) + ": classical bit " +
                                std::to_string(c) + " out of range");
  }
}

}  // namespace

void validate(const Circuit& c) {
  if (c.num_qubits < 0 || c.num_clbits < 0) {
    throw std::invalid_argument("register sizes must be nonnegative");
  }
  std::vector<bool> consumed(static_cast<std::size_t>(c.num_qubits), false);
  std::vector<bool> written(static_cast<std::size_t>(c.num_clbits), false);

  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const GateOp& op = c.ops[i];
    for (int q : touched_qubits(op)) check_qubit(q, c.num_qubits, consumed, i);

    if (const auto* two = std::get_if<ApplyCnot>(&op)) {
      if (two->control == two->target) {
        throw std::invalid_argument("op " + std::to_string(i) + ": control equals target");
      }
    } else if (const auto* rot = std::get_if<ApplyControlledRotation>(&op)) {
      if (rot->control == rot->target) {
        throw std::invalid_argument("op " + std::to_string(i) + ": control equals target");
      }
    } else if (const auto* meas = std::get_if<MeasureOp>(&op)) {
      check_clbit(meas->clbit, c.num_clbits, i);
      if (written[static_cast<std::size_t>(meas->clbit)]) {
        throw std::invalid_argument("op " + std::to_string(i) + ": classical bit " +
                                    std::to_string(meas->clbit) + " written twice");
      }
      written[static_cast<std::size_t>(meas->clbit)] = true;
      if (meas->consume) consumed[static_cast<std::size_t>(meas->qubit)] = true;
    } else if (const auto* cc = std::get_if<ClassicalComputeOp>(&op)) {
      for (int in : cc->inputs) {
        check_clbit(in, c.num_clbits, i);
        if (!written[static_cast<std::size_t>(in)]) {
          throw std::invalid_argument("op " + std::to_string(i) + ": classical bit " +
                                      std::to_string(in) + " read before any write");
        }
      }
      const int want = classical_output_width(cc->fn, static_cast<int>(cc->inputs.size()));
      if (static_cast<int>(cc->outputs.size()) != want) {
        throw std::invalid_argument("op " + std::to_string(i) + ": expected " + std::to_string(want) +
                                    " output bits, got " + std::to_string(cc->outputs.size()));
      }
      for (int out : cc->outputs) {
        check_clbit(out, c.num_clbits, i);
        if (written[static_cast<std::size_t>(out)]) {
          throw std::invalid_argument("op " + std::to_string(i) + ": classical bit " +
                                      std::to_string(out) + " written twice");
        }
        written[static_cast<std::size_t>(out)] = true;
      }
    } else if (const auto* cnd = std::get_if<CondOp>(&op)) {
      check_clbit(cnd->clbit, c.num_clbits, i);
      if (!written[static_cast<std::size_t>(cnd->clbit)]) {
        throw std::invalid_argument("op " + std::to_string(i) + ": classical bit " +
                                    std::to_string(cnd->clbit) + " read before any write");
      }
    }
  }
}

}  // namespace stateprep

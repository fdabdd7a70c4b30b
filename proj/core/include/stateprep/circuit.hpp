#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace stateprep {

enum class Gate1Q { H, X, Z, RY, RZ, Generic };
enum class RotationAxis { Y, Z };

/// Classical feedforward routines evaluated on measurement records.
enum class ClassicalFn {
  /// Prefix parities of the fused-link outcomes, complemented as a whole if
  /// that halves the number of corrections. Maps k input bits to k+1 flip
  /// flags, at most floor((k+1)/2) of which are set.
  GhzCorrect,
  /// Flip flags that align broadcast copies with the source qubit. Input is
  /// the source-link outcome followed by the carrier-link outcomes; output j
  /// is the running parity up to link j. No complement freedom here, exact
  /// copies are required.
  FanoutXCorrect,
  /// Single-bit parity of all inputs.
  Parity,
};

/// Row-major 2x2 complex matrix, defaulting to the identity.
struct Matrix2 {
  std::complex<double> m00{1.0, 0.0};
  std::complex<double> m01{0.0, 0.0};
  std::complex<double> m10{0.0, 0.0};
  std::complex<double> m11{1.0, 0.0};
};

/// Matrix of a named single-qubit gate. The angle is consumed by RY and RZ
/// and ignored otherwise; Generic has no canonical matrix and is rejected.
[[nodiscard]] Matrix2 gate_matrix(Gate1Q gate, double angle);

struct Apply1Q {
  Gate1Q gate = Gate1Q::H;
  int qubit = 0;
  double angle = 0.0;  ///< RY / RZ parameter
  Matrix2 matrix;      ///< used only when gate == Generic
};

struct ApplyCnot {
  int control = 0;
  int target = 0;
};

struct ApplyControlledRotation {
  RotationAxis axis = RotationAxis::Y;
  int control = 0;
  int target = 0;
  double angle = 0.0;
};

struct MeasureOp {
  int qubit = 0;
  int clbit = 0;
  /// Consumed qubits leave the live set: they are reset, never reused, and
  /// stop accumulating idle slots.
  bool consume = false;
};

struct ClassicalComputeOp {
  ClassicalFn fn = ClassicalFn::Parity;
  std::vector<int> inputs;   ///< classical bits read
  std::vector<int> outputs;  ///< classical bits written
};

/// Single-qubit gate applied iff the named classical bit is 1.
struct CondOp {
  int clbit = 0;
  Apply1Q inner;
};

using GateOp =
    std::variant<Apply1Q, ApplyCnot, ApplyControlledRotation, MeasureOp, ClassicalComputeOp, CondOp>;

/// Quantum circuit over a fixed register of qubits and classical bits.
struct Circuit {
  int num_qubits = 0;
  int num_clbits = 0;
  std::vector<GateOp> ops;

  Circuit() = default;
  Circuit(int qubits, int clbits) : num_qubits(qubits), num_clbits(clbits) {}

  void h(int q) { ops.push_back(Apply1Q{Gate1Q::H, q}); }
  void x(int q) { ops.push_back(Apply1Q{Gate1Q::X, q}); }
  void z(int q) { ops.push_back(Apply1Q{Gate1Q::Z, q}); }
  void ry(int q, double angle) { ops.push_back(Apply1Q{Gate1Q::RY, q, angle}); }
  void rz(int q, double angle) { ops.push_back(Apply1Q{Gate1Q::RZ, q, angle}); }
  void generic(int q, const Matrix2& u) { ops.push_back(Apply1Q{Gate1Q::Generic, q, 0.0, u}); }
  void cnot(int control, int target) { ops.push_back(ApplyCnot{control, target}); }
  void cry(int control, int target, double angle) {
    ops.push_back(ApplyControlledRotation{RotationAxis::Y, control, target, angle});
  }
  void crz(int control, int target, double angle) {
    ops.push_back(ApplyControlledRotation{RotationAxis::Z, control, target, angle});
  }
  void measure(int q, int clbit, bool consume = false) { ops.push_back(MeasureOp{q, clbit, consume}); }
  void classical(ClassicalFn fn, std::vector<int> inputs, std::vector<int> outputs) {
    ops.push_back(ClassicalComputeOp{fn, std::move(inputs), std::move(outputs)});
  }
  void cond(int clbit, Apply1Q gate) { ops.push_back(CondOp{clbit, gate}); }
  void cond_x(int clbit, int q) { cond(clbit, Apply1Q{Gate1Q::X, q}); }
  void cond_z(int clbit, int q) { cond(clbit, Apply1Q{Gate1Q::Z, q}); }
};

/// Qubits touched by an operation (empty for classical computations).
[[nodiscard]] std::vector<int> touched_qubits(const GateOp& op);

/// True for CNOT and controlled rotations.
[[nodiscard]] bool is_two_qubit(const GateOp& op);

/// Checks index ranges, measurement reuse of consumed qubits and classical
/// wiring. Throws std::invalid_argument with a description of the first
/// problem found.
void validate(const Circuit& c);

}  // namespace stateprep

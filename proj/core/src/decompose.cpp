#include "stateprep/decompose.hpp"

namespace stateprep {

Circuit decompose_controlled_rotations(const Circuit& c) {
  Circuit out(c.num_qubits, c.num_clbits);
  out.ops.reserve(c.ops.size());
  for (const GateOp& op : c.ops) {
    const auto* rot = std::get_if<ApplyControlledRotation>(&op);
    if (rot == nullptr) {
      out.ops.push_back(op);
      continue;
    }
    const Gate1Q axis_gate = rot->axis == RotationAxis::Y ? Gate1Q::RY : Gate1Q::RZ;
    // With R the rotation about the chosen axis, X R(-a/2) X = R(a/2), so
    // I, then CNOT, R(-a/2), CNOT, R(a/2) applies R(a) exactly when the
    // control is 1 and cancels to the identity when it is 0.
    out.generic(rot->target, Matrix2{});
    out.cnot(rot->control, rot->target);
    out.generic(rot->target, gate_matrix(axis_gate, -rot->angle / 2.0));
    out.cnot(rot->control, rot->target);
    out.generic(rot->target, gate_matrix(axis_gate, rot->angle / 2.0));
  }
  return out;
}

}  // namespace stateprep

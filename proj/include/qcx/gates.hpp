// Copyright 2026 The qcomplexity authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCX_GATES_HPP_
#define QCX_GATES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "qcx/state_vector.hpp"

namespace qcx {

/// Gate set: parameterized X/Y rotations, Hadamard, T phase, CNOT.
///
/// Rotation convention (half-angle): RX(theta) = exp(-i * theta * X / 2),
/// RY(theta) = exp(-i * theta * Y / 2). T = diag(1, exp(i*pi/4)).
enum class GateKind : std::uint8_t { Rx, Ry, H, T, Cnot };

struct GateOp {
  GateKind kind;
  int target = 0;    // acted-on qubit; CNOT target
  int control = -1;  // CNOT only
  double angle = 0.0;  // Rx/Ry only, radians

  static GateOp rx(int qubit, double angle) { return {GateKind::Rx, qubit, -1, angle}; }
  static GateOp ry(int qubit, double angle) { return {GateKind::Ry, qubit, -1, angle}; }
  static GateOp h(int qubit) { return {GateKind::H, qubit, -1, 0.0}; }
  static GateOp t(int qubit) { return {GateKind::T, qubit, -1, 0.0}; }
  static GateOp cnot(int control, int target) { return {GateKind::Cnot, target, control, 0.0}; }
};

/// Applies `gate` in place. Throws std::out_of_range for qubit indices not
/// valid for `state` and std::invalid_argument for CNOT with control ==
/// target. Norm is preserved to machine precision per application.
void apply_gate(StateVector& state, const GateOp& gate);

/// Applies a gate sequence in order.
void apply_circuit(StateVector& state, std::span<const GateOp> gates);

}  // namespace qcx

#endif  // QCX_GATES_HPP_

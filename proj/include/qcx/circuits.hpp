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

#ifndef QCX_CIRCUITS_HPP_
#define QCX_CIRCUITS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcx/gates.hpp"
#include "qcx/rng.hpp"
#include "qcx/state_vector.hpp"

namespace qcx {

/// CNOT connectivity of one ansatz layer.
enum class Topology { NoConnections, Linear, Ring, Star };

enum class CircuitFamily { Pqc, G3 };

const char* to_string(Topology topology);
const char* to_string(CircuitFamily family);
std::optional<Topology> parse_topology(const std::string& name);

/// One ensemble of circuits: a layered parameterized ansatz over a fixed
/// topology, or the {CNOT, H, T} random family at a fixed gate budget.
struct CircuitSpec {
  CircuitFamily family = CircuitFamily::Pqc;
  int n_qubits = 0;
  Topology topology = Topology::NoConnections;  // Pqc only
  int layers = 0;                               // Pqc only
  int total_gates = 0;                          // G3 only

  /// Both factories validate: n_qubits in [2, StateVector::kMaxQubits],
  /// layers >= 1 / total_gates >= 1. Throws std::invalid_argument.
  static CircuitSpec pqc(int n_qubits, Topology topology, int layers);
  static CircuitSpec g3(int n_qubits, int total_gates);
};

struct GateCount {
  std::optional<int> cnots;  // not fixed for G3 (gates are drawn at random)
  int total = 0;
};

/// Gate totals of a spec. For a layered ansatz this is a closed form in
/// (n, l): NoConnections (0, 2nl), Linear ((n-1)l, (3n-1)l), Ring (nl, 3nl),
/// Star ((n-1)l, (3n-1)l). For G3 the total is the configured budget.
GateCount gate_count(const CircuitSpec& spec);

/// Number of rotation angles a Pqc spec consumes: 2 * n_qubits * layers.
int parameter_count(const CircuitSpec& spec);

/// Rotation angles in [0, 2*pi), one per RX/RY in application order.
using ParameterVector = std::vector<double>;

/// Gates of one ansatz layer: RX on every qubit ascending, RY on every
/// qubit ascending, then the topology CNOTs. layer_params holds the 2n
/// angles (n RX then n RY). CNOT order: Linear (q, q+1) for q = 0..n-2;
/// Ring adds the closing (n-1, 0) last; Star uses qubit 0 as control of
/// (0, q) for q = 1..n-1.
std::vector<GateOp> pqc_layer_gates(int n_qubits, Topology topology,
                                    std::span<const double> layer_params);

/// All layers concatenated; layer j consumes params[2n*j, 2n*(j+1)).
std::vector<GateOp> pqc_circuit_gates(const CircuitSpec& spec, const ParameterVector& params);

/// Runs the layered ansatz on |0...0>.
StateVector run_pqc(const CircuitSpec& spec, const ParameterVector& params);

/// i.i.d. gate sequence: kind uniform over {CNOT, H, T}; H/T act on a
/// uniform qubit; CNOT on a uniform ordered (control, target) pair among
/// the n(n-1) possibilities. Requires n_qubits >= 2, total_gates >= 1.
std::vector<GateOp> sample_g3_circuit(int n_qubits, int total_gates, Prng& rng);

/// Uniform (Haar-induced) pure state: 2^n independent standard complex
/// Gaussians, normalized.
StateVector sample_haar_state(int n_qubits, Prng& rng);

/// 2*n*layers independent uniform draws on [0, 2*pi).
ParameterVector sample_parameter_vector(const CircuitSpec& spec, Prng& rng);

/// One ensemble member: fresh parameters (Pqc) or a fresh gate sequence
/// (G3), run on |0...0>.
StateVector sample_circuit_state(const CircuitSpec& spec, Prng& rng);

}  // namespace qcx

#endif  // QCX_CIRCUITS_HPP_

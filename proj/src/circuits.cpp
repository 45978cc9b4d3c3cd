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

#include "qcx/circuits.hpp"

#include <cmath>
#include <stdexcept>

namespace qcx {

const char* to_string(Topology topology) {
  switch (topology) {
    case Topology::NoConnections: return "none";
    case Topology::Linear: return "linear";
    case Topology::Ring: return "ring";
    case Topology::Star: return "star";
  }
  return "?";
}

const char* to_string(CircuitFamily family) {
  switch (family) {
    case CircuitFamily::Pqc: return "pqc";
    case CircuitFamily::G3: return "g3";
  }
  return "?";
}

std::optional<Topology> parse_topology(const std::string& name) {
  if (name == "none") return Topology::NoConnections;
  if (name == "linear") return Topology::Linear;
  if (name == "ring") return Topology::Ring;
  if (name == "star") return Topology::Star;
  return std::nullopt;
}

namespace {

void check_n_qubits(int n_qubits) {
  if (n_qubits < 2 || n_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("CircuitSpec: n_qubits must be in [2, 24]");
  }
}

}  // namespace

CircuitSpec CircuitSpec::pqc(int n_qubits, Topology topology, int layers) {
  check_n_qubits(n_qubits);
  if (layers < 1) throw std::invalid_argument("CircuitSpec: layers must be >= 1");
  CircuitSpec spec;
  spec.family = CircuitFamily::Pqc;
  spec.n_qubits = n_qubits;
  spec.topology = topology;
  spec.layers = layers;
  return spec;
}

CircuitSpec CircuitSpec::g3(int n_qubits, int total_gates) {
  check_n_qubits(n_qubits);
  if (total_gates < 1) throw std::invalid_argument("CircuitSpec: total_gates must be >= 1");
  CircuitSpec spec;
  spec.family = CircuitFamily::G3;
  spec.n_qubits = n_qubits;
  spec.total_gates = total_gates;
  return spec;
}

GateCount gate_count(const CircuitSpec& spec) {
  if (spec.family == CircuitFamily::G3) {
    return {std::nullopt, spec.total_gates};
  }
  const int n = spec.n_qubits;
  const int l = spec.layers;
  switch (spec.topology) {
    case Topology::NoConnections: return {0, 2 * n * l};
    case Topology::Linear: return {(n - 1) * l, (3 * n - 1) * l};
    case Topology::Ring: return {n * l, 3 * n * l};
    case Topology::Star: return {(n - 1) * l, (3 * n - 1) * l};
  }
  throw std::invalid_argument("gate_count: unknown topology");
}

int parameter_count(const CircuitSpec& spec) {
  if (spec.family != CircuitFamily::Pqc) return 0;
  return 2 * spec.n_qubits * spec.layers;
}

std::vector<GateOp> pqc_layer_gates(int n_qubits, Topology topology,
                                    std::span<const double> layer_params) {
  if (layer_params.size() != static_cast<std::size_t>(2 * n_qubits)) {
    throw std::invalid_argument("pqc_layer_gates: expected 2*n_qubits angles");
  }
  std::vector<GateOp> gates;
  gates.reserve(static_cast<std::size_t>(3 * n_qubits));
  for (int q = 0; q < n_qubits; ++q) gates.push_back(GateOp::rx(q, layer_params[q]));
  for (int q = 0; q < n_qubits; ++q) gates.push_back(GateOp::ry(q, layer_params[n_qubits + q]));
  switch (topology) {
    case Topology::NoConnections:
      break;
    case Topology::Linear:
      for (int q = 0; q + 1 < n_qubits; ++q) gates.push_back(GateOp::cnot(q, q + 1));
      break;
    case Topology::Ring:
      for (int q = 0; q + 1 < n_qubits; ++q) gates.push_back(GateOp::cnot(q, q + 1));
      gates.push_back(GateOp::cnot(n_qubits - 1, 0));
      break;
    case Topology::Star:
      for (int q = 1; q < n_qubits; ++q) gates.push_back(GateOp::cnot(0, q));
      break;
  }
  return gates;
}

std::vector<GateOp> pqc_circuit_gates(const CircuitSpec& spec, const ParameterVector& params) {
  if (spec.family != CircuitFamily::Pqc) {
    throw std::invalid_argument("pqc_circuit_gates: spec is not a Pqc spec");
  }
  const int per_layer = 2 * spec.n_qubits;
  if (params.size() != static_cast<std::size_t>(parameter_count(spec))) {
    throw std::invalid_argument("pqc_circuit_gates: expected 2*n*layers angles");
  }
  std::vector<GateOp> gates;
  gates.reserve(static_cast<std::size_t>(gate_count(spec).total));
  for (int layer = 0; layer < spec.layers; ++layer) {
    const std::span<const double> slice(params.data() + layer * per_layer,
                                        static_cast<std::size_t>(per_layer));
    std::vector<GateOp> block = pqc_layer_gates(spec.n_qubits, spec.topology, slice);
    gates.insert(gates.end(), block.begin(), block.end());
  }
  return gates;
}

StateVector run_pqc(const CircuitSpec& spec, const ParameterVector& params) {
  const std::vector<GateOp> gates = pqc_circuit_gates(spec, params);
  StateVector state(spec.n_qubits);
  apply_circuit(state, gates);
  return state;
}

std::vector<GateOp> sample_g3_circuit(int n_qubits, int total_gates, Prng& rng) {
  if (n_qubits < 2) throw std::invalid_argument("sample_g3_circuit: need n_qubits >= 2");
  if (total_gates < 1) throw std::invalid_argument("sample_g3_circuit: need total_gates >= 1");
  const std::uint64_t n = static_cast<std::uint64_t>(n_qubits);
  std::vector<GateOp> gates;
  gates.reserve(static_cast<std::size_t>(total_gates));
  for (int i = 0; i < total_gates; ++i) {
    switch (rng.uniform_below(3)) {
      case 0: {
        // Ordered pair among the n(n-1) possibilities.
        const std::uint64_t pair = rng.uniform_below(n * (n - 1));
        const int control = static_cast<int>(pair / (n - 1));
        int target = static_cast<int>(pair % (n - 1));
        if (target >= control) ++target;
        gates.push_back(GateOp::cnot(control, target));
        break;
      }
      case 1:
        gates.push_back(GateOp::h(static_cast<int>(rng.uniform_below(n))));
        break;
      default:
        gates.push_back(GateOp::t(static_cast<int>(rng.uniform_below(n))));
        break;
    }
  }
  return gates;
}

StateVector sample_haar_state(int n_qubits, Prng& rng) {
  StateVector state(n_qubits);
  Complex* amp = state.data();
  const std::size_t dim = state.dimension();
  double norm2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    amp[i] = rng.complex_gaussian();
    norm2 += std::norm(amp[i]);
  }
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (std::size_t i = 0; i < dim; ++i) amp[i] *= inv_norm;
  return state;
}

ParameterVector sample_parameter_vector(const CircuitSpec& spec, Prng& rng) {
  if (spec.family != CircuitFamily::Pqc) {
    throw std::invalid_argument("sample_parameter_vector: spec is not a Pqc spec");
  }
  ParameterVector params(static_cast<std::size_t>(parameter_count(spec)));
  for (double& angle : params) angle = rng.angle();
  return params;
}

StateVector sample_circuit_state(const CircuitSpec& spec, Prng& rng) {
  if (spec.family == CircuitFamily::Pqc) {
    return run_pqc(spec, sample_parameter_vector(spec, rng));
  }
  const std::vector<GateOp> gates = sample_g3_circuit(spec.n_qubits, spec.total_gates, rng);
  StateVector state(spec.n_qubits);
  apply_circuit(state, gates);
  return state;
}

}  // namespace qcx

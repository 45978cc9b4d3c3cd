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

#include "qcx/gates.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcx {

namespace {

// Amplitude count from which gate kernels split their loop across OpenMP
// threads. Smaller states run serially; ensemble evaluation parallelizes
// over samples instead, and nested regions stay inactive.
constexpr std::size_t kOmpMinDim = std::size_t{1} << 14;

void check_qubit(const StateVector& state, int qubit, const char* what) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::out_of_range(std::string(what) + ": qubit index out of range");
  }
}

// Iterates the dim/2 index pairs (i0, i1 = i0 | 2^q) that a single-qubit
// gate mixes. The body receives references to both amplitudes.
template <typename PairFn>
void for_each_pair(StateVector& state, int qubit, PairFn&& body) {
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t lo_mask = mask - 1;
  const std::size_t hi_mask = ~lo_mask;
  const std::int64_t half = static_cast<std::int64_t>(state.dimension() >> 1);
  Complex* amp = state.data();
#pragma omp parallel for schedule(static) if (state.dimension() >= kOmpMinDim)
  for (std::int64_t h = 0; h < half; ++h) {
    const std::size_t u = static_cast<std::size_t>(h);
    const std::size_t i0 = ((u & hi_mask) << 1) | (u & lo_mask);
    body(amp[i0], amp[i0 | mask]);
  }
}

void apply_rx(StateVector& state, int qubit, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  // [[c, -i s], [-i s, c]]
  for_each_pair(state, qubit, [c, s](Complex& a0, Complex& a1) {
    const Complex t0 = a0, t1 = a1;
    a0 = Complex{c * t0.real() + s * t1.imag(), c * t0.imag() - s * t1.real()};
    a1 = Complex{s * t0.imag() + c * t1.real(), -s * t0.real() + c * t1.imag()};
  });
}

void apply_ry(StateVector& state, int qubit, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  // [[c, -s], [s, c]]
  for_each_pair(state, qubit, [c, s](Complex& a0, Complex& a1) {
    const Complex t0 = a0, t1 = a1;
    a0 = c * t0 - s * t1;
    a1 = s * t0 + c * t1;
  });
}

void apply_h(StateVector& state, int qubit) {
  const double r = std::numbers::sqrt2 / 2.0;
  for_each_pair(state, qubit, [r](Complex& a0, Complex& a1) {
    const Complex t0 = a0, t1 = a1;
    a0 = r * (t0 + t1);
    a1 = r * (t0 - t1);
  });
}

void apply_t(StateVector& state, int qubit) {
  // diag(1, exp(i pi/4)): only the bit=1 half picks up the phase.
  const double r = std::numbers::sqrt2 / 2.0;
  for_each_pair(state, qubit, [r](Complex&, Complex& a1) {
    const Complex t1 = a1;
    a1 = Complex{r * (t1.real() - t1.imag()), r * (t1.real() + t1.imag())};
  });
}

void apply_cnot(StateVector& state, int control, int target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  const int low = std::min(control, target);
  const int high = std::max(control, target);
  const std::size_t lo_mask = (std::size_t{1} << low) - 1;
  const std::size_t mid_mask = ((std::size_t{1} << (high - 1)) - 1) ^ lo_mask;
  const std::size_t hi_mask = ~(lo_mask | mid_mask);
  const std::int64_t quarter = static_cast<std::int64_t>(state.dimension() >> 2);
  Complex* amp = state.data();
#pragma omp parallel for schedule(static) if (state.dimension() >= kOmpMinDim)
  for (std::int64_t h = 0; h < quarter; ++h) {
    const std::size_t u = static_cast<std::size_t>(h);
    const std::size_t base = ((u & hi_mask) << 2) | ((u & mid_mask) << 1) | (u & lo_mask);
    std::swap(amp[base | cmask], amp[base | cmask | tmask]);
  }
}

}  // namespace

void apply_gate(StateVector& state, const GateOp& gate) {
  switch (gate.kind) {
    case GateKind::Rx:
      check_qubit(state, gate.target, "apply_gate(Rx)");
      apply_rx(state, gate.target, gate.angle);
      return;
    case GateKind::Ry:
      check_qubit(state, gate.target, "apply_gate(Ry)");
      apply_ry(state, gate.target, gate.angle);
      return;
    case GateKind::H:
      check_qubit(state, gate.target, "apply_gate(H)");
      apply_h(state, gate.target);
      return;
    case GateKind::T:
      check_qubit(state, gate.target, "apply_gate(T)");
      apply_t(state, gate.target);
      return;
    case GateKind::Cnot:
      check_qubit(state, gate.target, "apply_gate(Cnot)");
      check_qubit(state, gate.control, "apply_gate(Cnot)");
      if (gate.control == gate.target) {
        throw std::invalid_argument("apply_gate(Cnot): control equals target");
      }
      apply_cnot(state, gate.control, gate.target);
      return;
  }
  throw std::invalid_argument("apply_gate: unknown gate kind");
}

void apply_circuit(StateVector& state, std::span<const GateOp> gates) {
  for (const GateOp& gate : gates) apply_gate(state, gate);
}

}  // namespace qcx

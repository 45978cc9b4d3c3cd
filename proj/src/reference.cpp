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

#include "qcx/reference.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcx::reference {

namespace {

using C = std::complex<double>;

std::array<C, 4> single_qubit_matrix(const GateOp& gate) {
  switch (gate.kind) {
    case GateKind::Rx: {
      const double c = std::cos(0.5 * gate.angle);
      const double s = std::sin(0.5 * gate.angle);
      return {C{c, 0}, C{0, -s}, C{0, -s}, C{c, 0}};
    }
    case GateKind::Ry: {
      const double c = std::cos(0.5 * gate.angle);
      const double s = std::sin(0.5 * gate.angle);
      return {C{c, 0}, C{-s, 0}, C{s, 0}, C{c, 0}};
    }
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      return {C{r, 0}, C{r, 0}, C{r, 0}, C{-r, 0}};
    }
    case GateKind::T: {
      const double r = std::numbers::sqrt2 / 2.0;
      return {C{1, 0}, C{0, 0}, C{0, 0}, C{r, r}};
    }
    default:
      throw std::invalid_argument("single_qubit_matrix: not a single-qubit gate");
  }
}

int bit_of(std::size_t index, int qubit) {
  return static_cast<int>((index >> qubit) & 1u);
}

}  // namespace

DenseMatrix gate_unitary(int n_qubits, const GateOp& gate) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  DenseMatrix u(dim * dim, C{0, 0});

  if (gate.kind == GateKind::Cnot) {
    // CNOT truth table on (control, target), identity on the rest.
    static constexpr double kTable[4][4] = {
        {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    const std::size_t other_mask =
        ~((std::size_t{1} << gate.control) | (std::size_t{1} << gate.target));
    for (std::size_t row = 0; row < dim; ++row) {
      for (std::size_t col = 0; col < dim; ++col) {
        if ((row & other_mask) != (col & other_mask)) continue;
        const int r = (bit_of(row, gate.control) << 1) | bit_of(row, gate.target);
        const int c = (bit_of(col, gate.control) << 1) | bit_of(col, gate.target);
        u[row * dim + col] = C{kTable[r][c], 0};
      }
    }
    return u;
  }

  const std::array<C, 4> m = single_qubit_matrix(gate);
  const std::size_t other_mask = ~(std::size_t{1} << gate.target);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      if ((row & other_mask) != (col & other_mask)) continue;
      u[row * dim + col] = m[bit_of(row, gate.target) * 2 + bit_of(col, gate.target)];
    }
  }
  return u;
}

DenseMatrix circuit_unitary(int n_qubits, std::span<const GateOp> gates) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  DenseMatrix total(dim * dim, C{0, 0});
  for (std::size_t i = 0; i < dim; ++i) total[i * dim + i] = C{1, 0};
  for (const GateOp& gate : gates) {
    const DenseMatrix u = gate_unitary(n_qubits, gate);
    DenseMatrix next(dim * dim, C{0, 0});
    for (std::size_t row = 0; row < dim; ++row) {
      for (std::size_t k = 0; k < dim; ++k) {
        const C factor = u[row * dim + k];
        if (factor == C{0, 0}) continue;
        for (std::size_t col = 0; col < dim; ++col) {
          next[row * dim + col] += factor * total[k * dim + col];
        }
      }
    }
    total = std::move(next);
  }
  return total;
}

std::vector<C> apply_circuit_dense(int n_qubits, std::span<const GateOp> gates) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<C> state(dim, C{0, 0});
  state[0] = C{1, 0};
  for (const GateOp& gate : gates) {
    const DenseMatrix u = gate_unitary(n_qubits, gate);
    std::vector<C> next(dim, C{0, 0});
    for (std::size_t row = 0; row < dim; ++row) {
      C acc{0, 0};
      for (std::size_t col = 0; col < dim; ++col) acc += u[row * dim + col] * state[col];
      next[row] = acc;
    }
    state = std::move(next);
  }
  return state;
}

double purity_via_partial_trace(std::span<const C> amplitudes, int n_qubits, int qubit) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (amplitudes.size() != dim) {
    throw std::invalid_argument("purity_via_partial_trace: bad amplitude count");
  }
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("purity_via_partial_trace: qubit index out of range");
  }
  // rho[a][b] = sum over basis states of the remaining qubits.
  std::array<C, 4> rho{C{0, 0}, C{0, 0}, C{0, 0}, C{0, 0}};
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & ~mask) != (j & ~mask)) continue;
      rho[bit_of(i, qubit) * 2 + bit_of(j, qubit)] += amplitudes[i] * std::conj(amplitudes[j]);
    }
  }
  C trace_sq{0, 0};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) trace_sq += rho[a * 2 + b] * rho[b * 2 + a];
  }
  return trace_sq.real();
}

}  // namespace qcx::reference

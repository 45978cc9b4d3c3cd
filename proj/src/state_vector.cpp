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

#include "qcx/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcx {

namespace {

// Below this magnitude a Meyer-Wallach value cannot be distinguished from
// zero: the purity partial sums over up to 2^kMaxQubits rounded products
// carry noise of at most ~1e-13.
constexpr double kEntanglementNoiseFloor = 1e-12;

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: n_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: n_qubits out of range");
  }
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
  }
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
  }
  return StateVector(n_qubits, std::move(amplitudes));
}

void StateVector::reset_to_zero() {
  std::fill(amps_.begin(), amps_.end(), Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amps_) total += std::norm(a);
  return total;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("fidelity: states have different qubit counts");
  }
  // Summed in index order; swapping the arguments conjugates every term and
  // every partial sum, so |inner|^2 is bit-identical under exchange.
  Complex inner{0.0, 0.0};
  const Complex* pa = a.data();
  const Complex* pb = b.data();
  const std::size_t dim = a.dimension();
  for (std::size_t i = 0; i < dim; ++i) inner += std::conj(pa[i]) * pb[i];
  return std::clamp(std::norm(inner), 0.0, 1.0);
}

std::vector<double> outcome_probabilities(const StateVector& state) {
  const std::size_t dim = state.dimension();
  std::vector<double> probs(dim);
  const Complex* amp = state.data();
  for (std::size_t i = 0; i < dim; ++i) probs[i] = std::norm(amp[i]);
  return probs;
}

double single_qubit_purity(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::out_of_range("single_qubit_purity: qubit index out of range");
  }
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t lo_mask = mask - 1;
  const std::size_t hi_mask = ~lo_mask;
  const std::size_t half = state.dimension() >> 1;
  const Complex* amp = state.data();

  // rho_k = [[p0, coh], [conj(coh), p1]] accumulated over index pairs.
  double p0 = 0.0;
  double p1 = 0.0;
  Complex coh{0.0, 0.0};
  for (std::size_t h = 0; h < half; ++h) {
    const std::size_t i0 = ((h & hi_mask) << 1) | (h & lo_mask);
    const std::size_t i1 = i0 | mask;
    p0 += std::norm(amp[i0]);
    p1 += std::norm(amp[i1]);
    coh += amp[i0] * std::conj(amp[i1]);
  }
  const double purity = p0 * p0 + p1 * p1 + 2.0 * std::norm(coh);
  return std::clamp(purity, 0.5, 1.0);
}

double meyer_wallach_q(const StateVector& state) {
  const int n = state.num_qubits();
  double purity_sum = 0.0;
  for (int k = 0; k < n; ++k) purity_sum += single_qubit_purity(state, k);
  const double q = 2.0 * (1.0 - purity_sum / n);
  if (q < kEntanglementNoiseFloor) return 0.0;
  return std::min(q, 1.0);
}

}  // namespace qcx

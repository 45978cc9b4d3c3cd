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

#ifndef QCX_STATE_VECTOR_HPP_
#define QCX_STATE_VECTOR_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcx {

using Complex = std::complex<double>;

/// Dense statevector of an n-qubit register.
///
/// Basis-index convention: qubit q is bit q of the basis index, so qubit 0
/// is the least significant bit. All kernels, oracles and tests share this
/// convention.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;  // 2^24 amplitudes = 256 MiB, memory guard

  /// Constructs |0...0>. Throws std::invalid_argument for n_qubits outside
  /// [1, kMaxQubits].
  explicit StateVector(int n_qubits);

  /// Wraps an explicit amplitude vector. The length must be 2^n_qubits and
  /// the squared norm must be 1 within 1e-9; amplitudes are taken as-is.
  static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }

  Complex* data() { return amps_.data(); }
  const Complex* data() const { return amps_.data(); }
  Complex amplitude(std::size_t index) const { return amps_[index]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  /// Resets to |0...0> without reallocating.
  void reset_to_zero();

  double norm_squared() const;

 private:
  StateVector(int n_qubits, std::vector<Complex> amplitudes)
      : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {}

  int n_qubits_;
  std::vector<Complex> amps_;
};

/// |<a|b>|^2, clamped to [0, 1]. Symmetric in its arguments bit-for-bit.
/// Throws std::invalid_argument on dimension mismatch.
double fidelity(const StateVector& a, const StateVector& b);

/// Computational-basis probabilities |amp_i|^2.
std::vector<double> outcome_probabilities(const StateVector& state);

/// Tr(rho_k^2) for the single-qubit marginal of `qubit`, computed from the
/// four partial sums of amplitude products (no density matrix is formed).
/// Result clamped to the physical range [0.5, 1].
/// Throws std::out_of_range for an invalid qubit index.
double single_qubit_purity(const StateVector& state, int qubit);

/// Multipartite entanglement Q = 2 * [1 - (1/n) * sum_k Tr(rho_k^2)].
/// Zero for product states, one when every single-qubit marginal is
/// maximally mixed. Values below 1e-12 are under the arithmetic noise
/// floor of the purity sums (for any n <= kMaxQubits) and are reported as
/// exactly zero.
double meyer_wallach_q(const StateVector& state);

}  // namespace qcx

#endif  // QCX_STATE_VECTOR_HPP_

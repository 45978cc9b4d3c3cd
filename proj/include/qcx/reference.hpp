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

#ifndef QCX_REFERENCE_HPP_
#define QCX_REFERENCE_HPP_

#include <complex>
#include <span>
#include <vector>

#include "qcx/gates.hpp"

namespace qcx::reference {

/// Serial dense-matrix simulator used as an independent oracle for the
/// in-place kernels, and as the baseline side of the benchmarks. Every gate
/// is expanded to its full 2^n x 2^n unitary and applied by matrix-vector
/// multiplication; nothing here shares code with the kernel path.
///
/// Row-major square matrix of dimension dim x dim.
using DenseMatrix = std::vector<std::complex<double>>;

/// Full-dimension unitary of a single gate acting on an n-qubit register
/// (identity on all untouched qubits). Qubit 0 is the least significant bit
/// of the basis index.
DenseMatrix gate_unitary(int n_qubits, const GateOp& gate);

/// Product of the gate unitaries in application order (last gate leftmost).
DenseMatrix circuit_unitary(int n_qubits, std::span<const GateOp> gates);

/// Runs a circuit on |0...0> by repeated dense matrix-vector products.
std::vector<std::complex<double>> apply_circuit_dense(int n_qubits,
                                                      std::span<const GateOp> gates);

/// Tr(rho_k^2) obtained by materializing the 2x2 reduced density matrix of
/// `qubit` with an explicit partial trace over all other qubits.
double purity_via_partial_trace(std::span<const std::complex<double>> amplitudes,
                                int n_qubits, int qubit);

}  // namespace qcx::reference

#endif  // QCX_REFERENCE_HPP_

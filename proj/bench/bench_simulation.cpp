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

// Compares the in-place bit-mask kernels against the serial dense-matrix
// reference, and measures ensemble throughput as a function of the OpenMP
// thread count.

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcx/circuits.hpp"
#include "qcx/quantifiers.hpp"
#include "qcx/reference.hpp"
#include "qcx/rng.hpp"
#include "test_util.hpp"

namespace {

std::vector<qcx::GateOp> fixed_circuit(int n_qubits, int gates) {
  qcx::Prng rng(12345);
  return qcx::testing::random_gates(n_qubits, gates, rng);
}

void BM_KernelApplyCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<qcx::GateOp> gates = fixed_circuit(n, 100);
  qcx::StateVector psi(n);
  for (auto _ : state) {
    psi.reset_to_zero();
    qcx::apply_circuit(psi, gates);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_KernelApplyCircuit)->DenseRange(2, 12, 2);

void BM_DenseReferenceApplyCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<qcx::GateOp> gates = fixed_circuit(n, 100);
  for (auto _ : state) {
    auto amps = qcx::reference::apply_circuit_dense(n, gates);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_DenseReferenceApplyCircuit)->DenseRange(2, 8, 2);

void BM_MeyerWallach(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qcx::Prng rng(7);
  const qcx::StateVector psi = qcx::sample_haar_state(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcx::meyer_wallach_q(psi));
  }
}
BENCHMARK(BM_MeyerWallach)->DenseRange(4, 12, 4);

// Whole-ensemble evaluation; the per-sample map is the parallel section.
void BM_EntanglementEnsemble(benchmark::State& state) {
#ifdef _OPENMP
  const int old_threads = omp_get_max_threads();
  omp_set_num_threads(static_cast<int>(state.range(0)));
#endif
  const qcx::CircuitSpec spec = qcx::CircuitSpec::pqc(8, qcx::Topology::Ring, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcx::entanglement_stats(spec, 1000, 42).mean_q);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
#ifdef _OPENMP
  omp_set_num_threads(old_threads);
#endif
}
BENCHMARK(BM_EntanglementEnsemble)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();

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

#ifndef QCX_QUANTIFIERS_HPP_
#define QCX_QUANTIFIERS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "qcx/circuits.hpp"
#include "qcx/state_vector.hpp"

namespace qcx {

/// Histogram of state-pair fidelities over [0, 1].
struct FidelityHistogram {
  std::vector<double> bin_edges;  // B+1 strictly increasing edges, 0 to 1
  std::vector<double> masses;     // B nonnegative masses summing to 1
};

/// Fidelity of each disjoint consecutive pair (2i, 2i+1). The ensemble size
/// must be even; m = size/2 values are returned.
std::vector<double> pair_fidelities(std::span<const StateVector> states);

/// B+1 uniform edges partitioning [0, 1].
std::vector<double> uniform_bin_edges(int n_bins);

/// Uniform-width histogram of samples in [0, 1]; a sample equal to 1.0 is
/// counted in the last bin. Throws std::invalid_argument for an empty
/// sample set or out-of-range samples.
FidelityHistogram build_histogram(std::span<const double> samples, int n_bins);

/// Exact bin masses of the Haar fidelity density (d-1)(1-F)^(d-2): the mass
/// of [a, b] is (1-a)^(d-1) - (1-b)^(d-1). Requires dimension >= 2. At
/// large d the high-F masses underflow to zero (their true values sit far
/// below the smallest double); the expressibility driver therefore
/// evaluates its KL term in log space instead of through these masses.
std::vector<double> haar_bin_masses(std::size_t dimension, std::span<const double> bin_edges);

/// Convenience: uniform edges plus the analytic Haar masses on them.
FidelityHistogram haar_histogram(std::size_t dimension, int n_bins);

/// Kullback-Leibler divergence sum_x p(x) ln(p(x)/q(x)) in nats. Bins with
/// p = 0 contribute nothing; p > 0 where q = 0 throws std::domain_error
/// rather than clamping. Histograms must share identical edges.
double kl_divergence(const FidelityHistogram& p, const FidelityHistogram& q);

/// Lorenz-curve cumulants: entries sorted non-increasing, partial sums
/// normalized by the total so the last cumulant is exactly 1. Input entries
/// must be nonnegative and sum to 1 within 1e-9.
std::vector<double> lorenz_cumulants(std::span<const double> probabilities);

/// Per-k population standard deviation of the Lorenz cumulants across an
/// ensemble of output distributions.
struct LorenzFluctuations {
  int n_qubits = 0;
  std::vector<double> std_per_k;  // index k-1 holds std of cumulant k
};

/// Fluctuations of an explicit ensemble (all vectors of equal length 2^n).
LorenzFluctuations lorenz_fluctuations(std::span<const std::vector<double>> distributions);

/// Ensemble mean and population standard deviation of the Meyer-Wallach
/// measure.
struct EntanglementStats {
  double mean_q = 0.0;
  double std_q = 0.0;
  int sample_size = 0;
};

/// Closed-form mean of Q over circular-unitary-ensemble states:
/// (2^n - 2) / (2^n + 1). Requires n >= 2.
double cue_mean_q(int n_qubits);

/// Closed-form standard deviation of Q over CUE states:
/// sqrt( 6(2^n-4) / ((2^n+3)(2^n+2)(2^n+1)n)
///     + 18*2^n   / ((2^n+3)(2^n+2)(2^n+1)^2) ).
double cue_std_q(int n_qubits);

/// Output distribution of one circuit draw on |0...0>.
std::vector<double> circuit_output_distribution(const CircuitSpec& spec, Prng& rng);

// Ensemble drivers. Each samples n_samples independent circuit outputs
// (per-sample generators derived from `seed`, so results are bit-identical
// across thread counts) and folds the quantifier serially.

/// KL divergence of the sampled fidelity histogram against the analytic
/// Haar masses at d = 2^n. n_samples must be even.
double expressibility(const CircuitSpec& spec, int n_samples, int n_bins, std::uint64_t seed);

LorenzFluctuations lorenz_fluctuations(const CircuitSpec& spec, int n_samples,
                                       std::uint64_t seed);

EntanglementStats entanglement_stats(const CircuitSpec& spec, int n_samples,
                                     std::uint64_t seed);

// Haar-ensemble counterparts, used for the reference series.

double haar_expressibility(int n_qubits, int n_samples, int n_bins, std::uint64_t seed);

LorenzFluctuations haar_lorenz_fluctuations(int n_qubits, int n_samples, std::uint64_t seed);

EntanglementStats haar_entanglement_stats(int n_qubits, int n_samples, std::uint64_t seed);

}  // namespace qcx

#endif  // QCX_QUANTIFIERS_HPP_

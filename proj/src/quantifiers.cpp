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

#include "qcx/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qcx {

namespace {

// Two-pass population standard deviation; for an all-equal sample the
// deviations cancel exactly instead of leaving sqrt-of-cancellation noise.
double population_std(std::span<const double> values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double sum_sq = 0.0;
  for (double v : values) {
    const double d = v - mean;
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / n);
}

using StateSampler = std::function<StateVector(Prng&)>;

// Fills states[i] from an independently seeded generator per index. The
// schedule never affects the result; the only parallel work is the map.
void sample_states(const StateSampler& sampler, std::uint64_t seed,
                   std::vector<StateVector>& states) {
  const std::int64_t count = static_cast<std::int64_t>(states.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    Prng rng = Prng::for_sample(seed, static_cast<std::uint64_t>(i));
    states[static_cast<std::size_t>(i)] = sampler(rng);
  }
}

StateSampler spec_sampler(const CircuitSpec& spec) {
  return [spec](Prng& rng) { return sample_circuit_state(spec, rng); };
}

StateSampler haar_sampler(int n_qubits) {
  return [n_qubits](Prng& rng) { return sample_haar_state(n_qubits, rng); };
}

// ln of the Haar mass of [a, b] at dimension d, evaluated without the
// underflow that hits the raw masses once (1-a)^(d-1) drops below the
// smallest double (high-F bins at d = 256 are ~1e-478 but their logs are
// ordinary numbers).
double haar_log_bin_mass(double dimension_minus_one, double a, double b) {
  const double log_upper = dimension_minus_one * std::log1p(-a);
  if (b >= 1.0) return log_upper;
  const double ratio = std::pow((1.0 - b) / (1.0 - a), dimension_minus_one);
  return log_upper + std::log1p(-ratio);
}

double expressibility_of(const StateSampler& sampler, int n_qubits, int n_samples,
                         int n_bins, std::uint64_t seed) {
  if (n_samples < 2 || n_samples % 2 != 0) {
    throw std::invalid_argument("expressibility: n_samples must be even and >= 2");
  }
  std::vector<StateVector> states(static_cast<std::size_t>(n_samples), StateVector(n_qubits));
  sample_states(sampler, seed, states);
  const std::vector<double> fids = pair_fidelities(states);
  const FidelityHistogram observed = build_histogram(fids, n_bins);
  const double exponent = static_cast<double>((std::size_t{1} << n_qubits) - 1);
  double total = 0.0;
  for (std::size_t i = 0; i < observed.masses.size(); ++i) {
    const double p = observed.masses[i];
    if (p == 0.0) continue;
    total += p * (std::log(p) -
                  haar_log_bin_mass(exponent, observed.bin_edges[i], observed.bin_edges[i + 1]));
  }
  return std::max(total, 0.0);
}

LorenzFluctuations lorenz_fluctuations_of(const StateSampler& sampler, int n_qubits,
                                          int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("lorenz_fluctuations: need n_samples >= 1");
  const std::size_t dim = std::size_t{1} << n_qubits;
  // Per-sample cumulant rows, written by index and reduced serially.
  std::vector<double> cumulants(static_cast<std::size_t>(n_samples) * dim);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n_samples; ++i) {
    Prng rng = Prng::for_sample(seed, static_cast<std::uint64_t>(i));
    const StateVector state = sampler(rng);
    const std::vector<double> row = lorenz_cumulants(outcome_probabilities(state));
    std::copy(row.begin(), row.end(), cumulants.begin() + i * static_cast<std::int64_t>(dim));
  }
  LorenzFluctuations result;
  result.n_qubits = n_qubits;
  result.std_per_k.resize(dim);
  std::vector<double> column(static_cast<std::size_t>(n_samples));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_samples); ++i) {
      column[i] = cumulants[i * dim + k];
    }
    result.std_per_k[k] = population_std(column);
  }
  return result;
}

EntanglementStats entanglement_stats_of(const StateSampler& sampler, int n_samples,
                                        std::uint64_t seed) {
  if (n_samples < 2) throw std::invalid_argument("entanglement_stats: need n_samples >= 2");
  std::vector<double> q_values(static_cast<std::size_t>(n_samples));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n_samples; ++i) {
    Prng rng = Prng::for_sample(seed, static_cast<std::uint64_t>(i));
    q_values[static_cast<std::size_t>(i)] = meyer_wallach_q(sampler(rng));
  }
  EntanglementStats stats;
  stats.sample_size = n_samples;
  double mean = 0.0;
  for (double q : q_values) mean += q;
  stats.mean_q = mean / n_samples;
  stats.std_q = population_std(q_values);
  return stats;
}

}  // namespace

std::vector<double> pair_fidelities(std::span<const StateVector> states) {
  if (states.size() % 2 != 0) {
    throw std::invalid_argument("pair_fidelities: ensemble size must be even");
  }
  std::vector<double> fids(states.size() / 2);
  for (std::size_t i = 0; i < fids.size(); ++i) {
    fids[i] = fidelity(states[2 * i], states[2 * i + 1]);
  }
  return fids;
}

std::vector<double> uniform_bin_edges(int n_bins) {
  if (n_bins < 1) throw std::invalid_argument("uniform_bin_edges: need n_bins >= 1");
  std::vector<double> edges(static_cast<std::size_t>(n_bins) + 1);
  for (int i = 0; i <= n_bins; ++i) {
    edges[static_cast<std::size_t>(i)] = static_cast<double>(i) / n_bins;
  }
  edges.back() = 1.0;
  return edges;
}

FidelityHistogram build_histogram(std::span<const double> samples, int n_bins) {
  if (samples.empty()) throw std::invalid_argument("build_histogram: no samples");
  if (n_bins < 1) throw std::invalid_argument("build_histogram: need n_bins >= 1");
  std::vector<double> counts(static_cast<std::size_t>(n_bins), 0.0);
  for (double f : samples) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::invalid_argument("build_histogram: sample outside [0, 1]");
    }
    const int bin = std::min(static_cast<int>(f * n_bins), n_bins - 1);
    counts[static_cast<std::size_t>(bin)] += 1.0;
  }
  FidelityHistogram hist;
  hist.bin_edges = uniform_bin_edges(n_bins);
  hist.masses.resize(counts.size());
  const double total = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < counts.size(); ++i) hist.masses[i] = counts[i] / total;
  return hist;
}

std::vector<double> haar_bin_masses(std::size_t dimension, std::span<const double> bin_edges) {
  if (dimension < 2) throw std::domain_error("haar_bin_masses: dimension must be >= 2");
  if (bin_edges.size() < 2) throw std::invalid_argument("haar_bin_masses: need >= 2 edges");
  const double exponent = static_cast<double>(dimension - 1);
  std::vector<double> masses(bin_edges.size() - 1);
  for (std::size_t i = 0; i + 1 < bin_edges.size(); ++i) {
    const double a = bin_edges[i];
    const double b = bin_edges[i + 1];
    if (!(b > a)) throw std::invalid_argument("haar_bin_masses: edges not increasing");
    masses[i] = std::pow(1.0 - a, exponent) - std::pow(1.0 - b, exponent);
  }
  return masses;
}

FidelityHistogram haar_histogram(std::size_t dimension, int n_bins) {
  FidelityHistogram hist;
  hist.bin_edges = uniform_bin_edges(n_bins);
  hist.masses = haar_bin_masses(dimension, hist.bin_edges);
  return hist;
}

double kl_divergence(const FidelityHistogram& p, const FidelityHistogram& q) {
  if (p.bin_edges != q.bin_edges || p.masses.size() != q.masses.size()) {
    throw std::invalid_argument("kl_divergence: histograms have different binning");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.masses.size(); ++i) {
    const double pi = p.masses[i];
    if (pi == 0.0) continue;
    const double qi = q.masses[i];
    if (qi <= 0.0) {
      throw std::domain_error("kl_divergence: p has mass where q vanishes");
    }
    total += pi * std::log(pi / qi);
  }
  return std::max(total, 0.0);
}

std::vector<double> lorenz_cumulants(std::span<const double> probabilities) {
  double total = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw std::invalid_argument("lorenz_cumulants: negative entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("lorenz_cumulants: entries must sum to 1 within 1e-9");
  }
  std::vector<double> sorted(probabilities.begin(), probabilities.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  std::vector<double> cumulants(sorted.size());
  double partial = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    partial += sorted[k];
    cumulants[k] = partial;
  }
  // Normalize by the same-order full sum so the last entry is exactly 1.
  const double sorted_total = cumulants.back();
  for (double& c : cumulants) c /= sorted_total;
  return cumulants;
}

LorenzFluctuations lorenz_fluctuations(std::span<const std::vector<double>> distributions) {
  if (distributions.empty()) {
    throw std::invalid_argument("lorenz_fluctuations: empty ensemble");
  }
  const std::size_t dim = distributions.front().size();
  int n_qubits = 0;
  while ((std::size_t{1} << n_qubits) < dim) ++n_qubits;
  std::vector<std::vector<double>> rows;
  rows.reserve(distributions.size());
  for (const std::vector<double>& dist : distributions) {
    if (dist.size() != dim) {
      throw std::invalid_argument("lorenz_fluctuations: ragged ensemble");
    }
    rows.push_back(lorenz_cumulants(dist));
  }
  LorenzFluctuations result;
  result.n_qubits = n_qubits;
  result.std_per_k.resize(dim);
  std::vector<double> column(rows.size());
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][k];
    result.std_per_k[k] = population_std(column);
  }
  return result;
}

double cue_mean_q(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("cue_mean_q: need n_qubits >= 2");
  const double d = std::ldexp(1.0, n_qubits);  // 2^n
  return (d - 2.0) / (d + 1.0);
}

double cue_std_q(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("cue_std_q: need n_qubits >= 2");
  const double d = std::ldexp(1.0, n_qubits);
  const double first = 6.0 * (d - 4.0) / ((d + 3.0) * (d + 2.0) * (d + 1.0) * n_qubits);
  const double second = 18.0 * d / ((d + 3.0) * (d + 2.0) * (d + 1.0) * (d + 1.0));
  return std::sqrt(first + second);
}

std::vector<double> circuit_output_distribution(const CircuitSpec& spec, Prng& rng) {
  return outcome_probabilities(sample_circuit_state(spec, rng));
}

double expressibility(const CircuitSpec& spec, int n_samples, int n_bins,
                      std::uint64_t seed) {
  return expressibility_of(spec_sampler(spec), spec.n_qubits, n_samples, n_bins, seed);
}

LorenzFluctuations lorenz_fluctuations(const CircuitSpec& spec, int n_samples,
                                       std::uint64_t seed) {
  return lorenz_fluctuations_of(spec_sampler(spec), spec.n_qubits, n_samples, seed);
}

EntanglementStats entanglement_stats(const CircuitSpec& spec, int n_samples,
                                     std::uint64_t seed) {
  return entanglement_stats_of(spec_sampler(spec), n_samples, seed);
}

double haar_expressibility(int n_qubits, int n_samples, int n_bins, std::uint64_t seed) {
  return expressibility_of(haar_sampler(n_qubits), n_qubits, n_samples, n_bins, seed);
}

LorenzFluctuations haar_lorenz_fluctuations(int n_qubits, int n_samples, std::uint64_t seed) {
  return lorenz_fluctuations_of(haar_sampler(n_qubits), n_qubits, n_samples, seed);
}

EntanglementStats haar_entanglement_stats(int n_qubits, int n_samples, std::uint64_t seed) {
  return entanglement_stats_of(haar_sampler(n_qubits), n_samples, seed);
}

}  // namespace qcx

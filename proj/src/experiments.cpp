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

#include "qcx/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <tuple>

namespace qcx {

const char* to_string(Quantifier quantifier) {
  switch (quantifier) {
    case Quantifier::Expressibility: return "expressibility";
    case Quantifier::Majorization: return "majorization";
    case Quantifier::Entanglement: return "entanglement";
  }
  return "?";
}

std::optional<Quantifier> parse_quantifier(const std::string& name) {
  if (name == "expressibility") return Quantifier::Expressibility;
  if (name == "majorization") return Quantifier::Majorization;
  if (name == "entanglement") return Quantifier::Entanglement;
  return std::nullopt;
}

namespace {

std::uint64_t fold_string(std::uint64_t seed, const std::string& text) {
  for (unsigned char c : text) seed = seed_combine(seed, c);
  return seed_combine(seed, text.size());
}

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

bool all_finite(const ResultRecord& record) {
  for (double v : record.std_per_k) {
    if (!std::isfinite(v)) return false;
  }
  return std::isfinite(record.kl) && std::isfinite(record.mean_q) &&
         std::isfinite(record.std_q);
}

ResultRecord base_record(const std::string& family, const std::string& topology,
                         int n_qubits, int layers, int total_gates, Quantifier quantifier,
                         int samples, int n_bins, std::uint64_t stream_seed) {
  ResultRecord record;
  record.family = family;
  record.topology = topology;
  record.n_qubits = n_qubits;
  record.layers = layers;
  record.total_gates = total_gates;
  record.quantifier = to_string(quantifier);
  record.samples = samples;
  record.n_bins = quantifier == Quantifier::Expressibility ? n_bins : 0;
  record.seed = stream_seed;
  return record;
}

// Canonical ordering of the emitted stream: by quantifier, family,
// topology, size, depth.
std::tuple<std::string, std::string, std::string, int, int, int> sort_key(
    const ResultRecord& r) {
  return {r.quantifier, r.family, r.topology, r.n_qubits, r.layers, r.total_gates};
}

}  // namespace

std::uint64_t record_seed(std::uint64_t master_seed, const std::string& family,
                          const std::string& topology, int n_qubits, int layers,
                          int total_gates, Quantifier quantifier) {
  std::uint64_t seed = splitmix64(master_seed);
  seed = fold_string(seed, family);
  seed = fold_string(seed, topology);
  seed = seed_combine(seed, static_cast<std::uint64_t>(n_qubits));
  seed = seed_combine(seed, static_cast<std::uint64_t>(layers));
  seed = seed_combine(seed, static_cast<std::uint64_t>(total_gates));
  seed = seed_combine(seed, static_cast<std::uint64_t>(quantifier) + 1);
  return seed;
}

ResultRecord evaluate_quantifier(const CircuitSpec& spec, Quantifier quantifier,
                                 int samples, int n_bins, std::uint64_t stream_seed) {
  const bool is_pqc = spec.family == CircuitFamily::Pqc;
  ResultRecord record = base_record(
      to_string(spec.family), is_pqc ? to_string(spec.topology) : "", spec.n_qubits,
      is_pqc ? spec.layers : 0, gate_count(spec).total, quantifier, samples, n_bins,
      stream_seed);
  WallTimer timer;
  try {
    switch (quantifier) {
      case Quantifier::Expressibility:
        record.kl = expressibility(spec, samples, n_bins, stream_seed);
        break;
      case Quantifier::Majorization:
        record.std_per_k = lorenz_fluctuations(spec, samples, stream_seed).std_per_k;
        break;
      case Quantifier::Entanglement: {
        const EntanglementStats stats = entanglement_stats(spec, samples, stream_seed);
        record.mean_q = stats.mean_q;
        record.std_q = stats.std_q;
        record.cue_mean = cue_mean_q(spec.n_qubits);
        record.cue_std = cue_std_q(spec.n_qubits);
        break;
      }
    }
    if (!all_finite(record)) record.error = "non-finite result";
  } catch (const std::exception& e) {
    record.error = e.what();
  }
  record.wall_seconds = timer.seconds();
  return record;
}

ResultRecord evaluate_haar(int n_qubits, Quantifier quantifier, int samples,
                           std::uint64_t stream_seed, int n_bins) {
  ResultRecord record =
      base_record("haar", "", n_qubits, 0, 0, quantifier, samples, n_bins, stream_seed);
  WallTimer timer;
  try {
    switch (quantifier) {
      case Quantifier::Expressibility:
        record.kl = haar_expressibility(n_qubits, samples, n_bins, stream_seed);
        break;
      case Quantifier::Majorization:
        record.std_per_k = haar_lorenz_fluctuations(n_qubits, samples, stream_seed).std_per_k;
        break;
      case Quantifier::Entanglement: {
        const EntanglementStats stats = haar_entanglement_stats(n_qubits, samples, stream_seed);
        record.mean_q = stats.mean_q;
        record.std_q = stats.std_q;
        record.cue_mean = cue_mean_q(n_qubits);
        record.cue_std = cue_std_q(n_qubits);
        break;
      }
    }
    if (!all_finite(record)) record.error = "non-finite result";
  } catch (const std::exception& e) {
    record.error = e.what();
  }
  record.wall_seconds = timer.seconds();
  return record;
}

HaarReference haar_reference(int n_qubits, int samples, std::uint64_t seed) {
  HaarReference reference;
  reference.majorization = evaluate_haar(
      n_qubits, Quantifier::Majorization, samples,
      seed_combine(seed, static_cast<std::uint64_t>(Quantifier::Majorization) + 1));
  reference.entanglement = evaluate_haar(
      n_qubits, Quantifier::Entanglement, samples,
      seed_combine(seed, static_cast<std::uint64_t>(Quantifier::Entanglement) + 1));
  return reference;
}

std::vector<ResultRecord> run_sweep(const SweepConfig& config) {
  std::vector<ResultRecord> records;
  const bool want_pqc = std::find(config.families.begin(), config.families.end(),
                                  CircuitFamily::Pqc) != config.families.end();
  const bool want_g3 = std::find(config.families.begin(), config.families.end(),
                                 CircuitFamily::G3) != config.families.end();

  for (int n : config.qubits) {
    // Matched G3 budgets: every distinct ansatz total on this grid.
    std::set<int> g3_totals;
    for (Topology topology : config.topologies) {
      for (int layers : config.layers) {
        try {
          g3_totals.insert(gate_count(CircuitSpec::pqc(n, topology, layers)).total);
        } catch (const std::exception&) {
          // invalid grid point; the pqc loop below reports it
        }
      }
    }

    for (Quantifier quantifier : config.quantifiers) {
      if (want_pqc) {
        for (Topology topology : config.topologies) {
          for (int layers : config.layers) {
            try {
              const CircuitSpec spec = CircuitSpec::pqc(n, topology, layers);
              const std::uint64_t seed =
                  record_seed(config.master_seed, "pqc", to_string(topology), n, layers,
                              gate_count(spec).total, quantifier);
              records.push_back(evaluate_quantifier(spec, quantifier, config.samples_per_point,
                                                    config.n_bins, seed));
            } catch (const std::exception& e) {
              ResultRecord diag = base_record("pqc", to_string(topology), n, layers, 0,
                                              quantifier, config.samples_per_point,
                                              config.n_bins, 0);
              diag.error = e.what();
              records.push_back(std::move(diag));
            }
          }
        }
      }
      if (want_g3) {
        for (int total : g3_totals) {
          try {
            const CircuitSpec spec = CircuitSpec::g3(n, total);
            const std::uint64_t seed =
                record_seed(config.master_seed, "g3", "", n, 0, total, quantifier);
            records.push_back(evaluate_quantifier(spec, quantifier, config.samples_per_point,
                                                  config.n_bins, seed));
          } catch (const std::exception& e) {
            ResultRecord diag = base_record("g3", "", n, 0, total, quantifier,
                                            config.samples_per_point, config.n_bins, 0);
            diag.error = e.what();
            records.push_back(std::move(diag));
          }
        }
      }
      if (config.haar_reference_rows && quantifier != Quantifier::Expressibility) {
        const std::uint64_t seed =
            record_seed(config.master_seed, "haar", "", n, 0, 0, quantifier);
        records.push_back(evaluate_haar(n, quantifier, config.samples_per_point, seed));
      }
    }
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const ResultRecord& a, const ResultRecord& b) {
                     return sort_key(a) < sort_key(b);
                   });
  return records;
}

}  // namespace qcx

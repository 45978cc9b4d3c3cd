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

#ifndef QCX_EXPERIMENTS_HPP_
#define QCX_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcx/circuits.hpp"
#include "qcx/quantifiers.hpp"

namespace qcx {

enum class Quantifier { Expressibility, Majorization, Entanglement };

const char* to_string(Quantifier quantifier);
std::optional<Quantifier> parse_quantifier(const std::string& name);

/// Grid description of one sweep run.
struct SweepConfig {
  std::vector<int> qubits;
  std::vector<int> layers;
  std::vector<Topology> topologies;
  std::vector<CircuitFamily> families;
  std::vector<Quantifier> quantifiers;
  int samples_per_point = 10000;
  int n_bins = 75;
  std::uint64_t master_seed = 42;
  /// Emit Haar reference rows (family "haar") for majorization and
  /// entanglement at each qubit count.
  bool haar_reference_rows = true;
};

/// One evaluated grid point. Self-describing: rerunning the echoed fields
/// with the echoed seed reproduces the payload bit-for-bit.
struct ResultRecord {
  std::string family;    // "pqc" | "g3" | "haar"
  std::string topology;  // set for pqc only
  int n_qubits = 0;
  int layers = 0;       // 0 for g3 and haar
  int total_gates = 0;  // 0 for haar
  std::string quantifier;
  int samples = 0;
  int n_bins = 0;  // expressibility only
  std::uint64_t seed = 0;

  // Payload, one group per quantifier.
  double kl = 0.0;
  std::vector<double> std_per_k;
  double mean_q = 0.0;
  double std_q = 0.0;
  double cue_mean = 0.0;
  double cue_std = 0.0;

  double wall_seconds = 0.0;  // measured, never serialized
  std::string error;          // nonempty marks a diagnostic record
};

/// Stream seed of a grid point, derived from the master seed and the
/// point's identity so that scheduling and evaluation order are irrelevant.
/// For G3 pass layers = 0; for Haar rows pass family "haar" and gates = 0.
std::uint64_t record_seed(std::uint64_t master_seed, const std::string& family,
                          const std::string& topology, int n_qubits, int layers,
                          int total_gates, Quantifier quantifier);

/// Evaluates one quantifier for one circuit ensemble with an explicit
/// stream seed. Exceptions and non-finite payloads become diagnostic
/// records instead of propagating.
ResultRecord evaluate_quantifier(const CircuitSpec& spec, Quantifier quantifier,
                                 int samples, int n_bins, std::uint64_t stream_seed);

/// Haar-ensemble record. Expressibility against the analytic masses acts
/// as a self-consistency check and should land near the finite-sample
/// floor. n_bins is ignored except for expressibility.
ResultRecord evaluate_haar(int n_qubits, Quantifier quantifier, int samples,
                           std::uint64_t stream_seed, int n_bins = 75);

/// Haar reference series for one qubit count: Lorenz fluctuation curve and
/// entanglement statistics, computed from dedicated per-quantifier streams
/// derived from `seed`.
struct HaarReference {
  ResultRecord majorization;
  ResultRecord entanglement;
};
HaarReference haar_reference(int n_qubits, int samples, std::uint64_t seed);

/// Evaluates the full grid: one record per (family/topology, n, layers,
/// quantifier) plus G3 records at every distinct matched gate total and
/// Haar reference rows. Records are returned sorted by grid key, so the
/// output is independent of evaluation order.
std::vector<ResultRecord> run_sweep(const SweepConfig& config);

}  // namespace qcx

#endif  // QCX_EXPERIMENTS_HPP_

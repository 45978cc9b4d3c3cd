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

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "gtest/gtest.h"
#include "qcx/circuits.hpp"
#include "qcx/quantifiers.hpp"
#include "qcx/reference.hpp"
#include "test_util.hpp"

namespace qcx {
namespace {

using testing::max_abs_diff;

int count_cnots(const std::vector<GateOp>& gates) {
  int count = 0;
  for (const GateOp& g : gates) count += g.kind == GateKind::Cnot ? 1 : 0;
  return count;
}

TEST(PqcLayer, RingLayerStructure) {
  std::vector<double> params(8);
  for (std::size_t i = 0; i < params.size(); ++i) params[i] = 0.1 * static_cast<double>(i + 1);
  const std::vector<GateOp> gates = pqc_layer_gates(4, Topology::Ring, params);
  ASSERT_EQ(gates.size(), 12u);
  for (int q = 0; q < 4; ++q) {
    EXPECT_EQ(gates[q].kind, GateKind::Rx);
    EXPECT_EQ(gates[q].target, q);
    EXPECT_EQ(gates[q].angle, params[static_cast<std::size_t>(q)]);
    EXPECT_EQ(gates[4 + q].kind, GateKind::Ry);
    EXPECT_EQ(gates[4 + q].target, q);
    EXPECT_EQ(gates[4 + q].angle, params[static_cast<std::size_t>(4 + q)]);
  }
  const std::array<std::pair<int, int>, 4> expected_cnots = {
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(gates[8 + i].kind, GateKind::Cnot);
    EXPECT_EQ(gates[8 + i].control, expected_cnots[i].first);
    EXPECT_EQ(gates[8 + i].target, expected_cnots[i].second);
  }
}

TEST(PqcLayer, TopologyCnotPatterns) {
  const std::vector<double> params(8, 0.0);
  EXPECT_EQ(pqc_layer_gates(4, Topology::NoConnections, params).size(), 8u);
  EXPECT_EQ(count_cnots(pqc_layer_gates(4, Topology::NoConnections, params)), 0);

  const std::vector<GateOp> star = pqc_layer_gates(4, Topology::Star, params);
  ASSERT_EQ(star.size(), 11u);
  for (std::size_t i = 8; i < star.size(); ++i) {
    EXPECT_EQ(star[i].control, 0);
    EXPECT_EQ(star[i].target, static_cast<int>(i) - 7);
  }

  const std::vector<double> params8(16, 0.0);
  EXPECT_EQ(pqc_layer_gates(8, Topology::Linear, params8).size(), 23u);
}

TEST(PqcLayer, RejectsWrongParameterCount) {
  EXPECT_THROW(pqc_layer_gates(4, Topology::Ring, std::vector<double>(7)),
               std::invalid_argument);
}

TEST(GateCounts, MatchClosedForms) {
  const GateCount star = gate_count(CircuitSpec::pqc(4, Topology::Star, 5));
  EXPECT_EQ(star.cnots, 15);
  EXPECT_EQ(star.total, 55);

  const GateCount ring = gate_count(CircuitSpec::pqc(8, Topology::Ring, 10));
  EXPECT_EQ(ring.cnots, 80);
  EXPECT_EQ(ring.total, 240);

  const GateCount none = gate_count(CircuitSpec::pqc(4, Topology::NoConnections, 1));
  EXPECT_EQ(none.cnots, 0);
  EXPECT_EQ(none.total, 8);

  const GateCount g3 = gate_count(CircuitSpec::g3(4, 96));
  EXPECT_FALSE(g3.cnots.has_value());
  EXPECT_EQ(g3.total, 96);
}

TEST(GateCounts, AgreeWithGeneratedCircuitsAcrossGrid) {
  Prng rng(3);
  for (int n = 4; n <= 8; ++n) {
    for (const Topology topology : {Topology::NoConnections, Topology::Linear, Topology::Ring,
                                    Topology::Star}) {
      for (int layers = 1; layers <= 10; ++layers) {
        const CircuitSpec spec = CircuitSpec::pqc(n, topology, layers);
        const ParameterVector params = sample_parameter_vector(spec, rng);
        const std::vector<GateOp> gates = pqc_circuit_gates(spec, params);
        const GateCount count = gate_count(spec);
        EXPECT_EQ(gates.size(), static_cast<std::size_t>(count.total));
        EXPECT_EQ(count_cnots(gates), count.cnots.value());
      }
    }
  }
}

TEST(RunPqc, ZeroAnglesGiveZeroState) {
  for (const Topology topology : {Topology::NoConnections, Topology::Linear, Topology::Ring,
                                  Topology::Star}) {
    const CircuitSpec spec = CircuitSpec::pqc(4, topology, 3);
    const StateVector state = run_pqc(spec, ParameterVector(24, 0.0));
    EXPECT_EQ(state.amplitude(0), Complex(1, 0));
    for (std::size_t i = 1; i < state.dimension(); ++i) {
      EXPECT_EQ(state.amplitude(i), Complex(0, 0));
    }
  }
}

TEST(RunPqc, FlipChainConcentratesOnThree) {
  // RX(pi) flips qubit 0 (up to phase), CNOT(0,1) then flips qubit 1.
  const CircuitSpec spec = CircuitSpec::pqc(2, Topology::Linear, 1);
  const ParameterVector params = {std::numbers::pi, 0.0, 0.0, 0.0};
  const StateVector state = run_pqc(spec, params);
  const std::vector<double> probs = outcome_probabilities(state);
  EXPECT_NEAR(probs[3], 1.0, 1e-12);

  const std::vector<Complex> oracle =
      reference::apply_circuit_dense(2, pqc_circuit_gates(spec, params));
  EXPECT_LT(max_abs_diff(state.amplitudes(), oracle), 1e-12);
}

TEST(RunPqc, TenLayerRingConsumesEightyAngles) {
  const CircuitSpec spec = CircuitSpec::pqc(4, Topology::Ring, 10);
  EXPECT_EQ(parameter_count(spec), 80);
  EXPECT_EQ(gate_count(spec).total, 120);
  EXPECT_THROW(run_pqc(spec, ParameterVector(79, 0.0)), std::invalid_argument);
}

TEST(RunPqc, LayersConsumeIndependentParameterBlocks) {
  const CircuitSpec spec = CircuitSpec::pqc(3, Topology::Ring, 4);
  ParameterVector params(static_cast<std::size_t>(parameter_count(spec)));
  for (std::size_t i = 0; i < params.size(); ++i) params[i] = 0.01 * static_cast<double>(i + 1);

  ParameterVector modified = params;
  for (int i = 0; i < 6; ++i) modified[static_cast<std::size_t>(12 + i)] += 1.0;  // layer 2 block

  const std::vector<GateOp> before = pqc_circuit_gates(spec, params);
  const std::vector<GateOp> after = pqc_circuit_gates(spec, modified);
  ASSERT_EQ(before.size(), after.size());
  const std::size_t per_layer = before.size() / 4;
  for (std::size_t i = 0; i < before.size(); ++i) {
    const bool in_layer_2 = i / per_layer == 2;
    const bool angle_changed = before[i].angle != after[i].angle;
    if (angle_changed) {
      EXPECT_TRUE(in_layer_2) << "gate " << i;
    }
    EXPECT_EQ(before[i].kind, after[i].kind);
    EXPECT_EQ(before[i].target, after[i].target);
  }
}

TEST(SampleG3, ValidatesArguments) {
  Prng rng(1);
  EXPECT_THROW(sample_g3_circuit(4, 0, rng), std::invalid_argument);
  EXPECT_THROW(sample_g3_circuit(1, 5, rng), std::invalid_argument);
  EXPECT_EQ(sample_g3_circuit(2, 1, rng).size(), 1u);
}

TEST(SampleG3, DeterministicForFixedSeed) {
  Prng rng_a(77);
  Prng rng_b(77);
  const std::vector<GateOp> a = sample_g3_circuit(4, 50, rng_a);
  const std::vector<GateOp> b = sample_g3_circuit(4, 50, rng_b);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].kind, b[i].kind);
    EXPECT_EQ(a[i].target, b[i].target);
    EXPECT_EQ(a[i].control, b[i].control);
  }
}

TEST(SampleG3, KindFrequenciesAreUniform) {
  Prng rng(123);
  const int draws = 30000;
  const std::vector<GateOp> gates = sample_g3_circuit(4, draws, rng);
  std::map<GateKind, int> counts;
  for (const GateOp& g : gates) ++counts[g.kind];
  for (const GateKind kind : {GateKind::Cnot, GateKind::H, GateKind::T}) {
    EXPECT_NEAR(static_cast<double>(counts[kind]) / draws, 1.0 / 3.0, 0.02);
  }

  // Chi-square against uniform(1/3), 2 dof; 9.210 is the 1% critical value.
  const double expected = draws / 3.0;
  double chi_sq = 0.0;
  for (const auto& [kind, observed] : counts) {
    chi_sq += (observed - expected) * (observed - expected) / expected;
  }
  EXPECT_LT(chi_sq, 9.210);
}

TEST(SampleG3, CnotPairsAreUniform) {
  Prng rng(45);
  std::map<std::pair<int, int>, int> pair_counts;
  int cnots = 0;
  while (cnots < 10000) {
    for (const GateOp& g : sample_g3_circuit(2, 1000, rng)) {
      if (g.kind != GateKind::Cnot) continue;
      ++pair_counts[{g.control, g.target}];
      ++cnots;
      if (cnots == 10000) break;
    }
  }
  EXPECT_EQ(pair_counts.size(), 2u);
  const double forward = pair_counts[{0, 1}] / 10000.0;
  const double backward = pair_counts[{1, 0}] / 10000.0;
  EXPECT_NEAR(forward, 0.5, 0.02);
  EXPECT_NEAR(backward, 0.5, 0.02);

  // All n(n-1) ordered pairs occur at n=3.
  std::map<std::pair<int, int>, int> pairs3;
  for (const GateOp& g : sample_g3_circuit(3, 20000, rng)) {
    if (g.kind == GateKind::Cnot) ++pairs3[{g.control, g.target}];
  }
  EXPECT_EQ(pairs3.size(), 6u);
  for (const auto& [pair, count] : pairs3) {
    EXPECT_NE(pair.first, pair.second);
    EXPECT_GT(count, 0);
  }
}

TEST(SampleHaar, NormalizedAndSymmetric) {
  Prng rng(9);
  for (int n : {1, 3, 6}) {
    const StateVector state = sample_haar_state(n, rng);
    EXPECT_LT(std::abs(state.norm_squared() - 1.0), 1e-12);
  }

  // At n=1 the population of |amp_0|^2 is uniform on [0,1]: mean 1/2 with
  // standard error sqrt(1/12/m).
  const int m = 10000;
  double mean = 0.0;
  for (int i = 0; i < m; ++i) {
    Prng sample_rng = Prng::for_sample(404, static_cast<std::uint64_t>(i));
    mean += std::norm(sample_haar_state(1, sample_rng).amplitude(0));
  }
  mean /= m;
  const double tol = 3.0 * std::sqrt(1.0 / 12.0 / m);
  EXPECT_NEAR(mean, 0.5, tol);
}

TEST(SampleHaar, MeanPairFidelityIsOneOverD) {
  // F ~ Beta(1, d-1) for Haar pairs: mean 1/d, var (d-1)/(d^2 (d+1)).
  const int pairs = 5000;
  const int d = 16;
  double mean = 0.0;
  for (int i = 0; i < pairs; ++i) {
    Prng rng_a = Prng::for_sample(808, static_cast<std::uint64_t>(2 * i));
    Prng rng_b = Prng::for_sample(808, static_cast<std::uint64_t>(2 * i + 1));
    mean += fidelity(sample_haar_state(4, rng_a), sample_haar_state(4, rng_b));
  }
  mean /= pairs;
  const double var = (d - 1.0) / (static_cast<double>(d) * d * (d + 1.0));
  EXPECT_NEAR(mean, 1.0 / d, 3.0 * std::sqrt(var / pairs));
}

TEST(SampleHaar, FidelityHistogramMatchesAnalyticLaw) {
  EXPECT_LT(haar_expressibility(4, 10000, 75, 515), 0.02);
}

TEST(SampleParameters, UniformOnZeroTwoPi) {
  const CircuitSpec spec = CircuitSpec::pqc(5, Topology::Linear, 10);
  Prng rng(21);
  const ParameterVector params = sample_parameter_vector(spec, rng);
  EXPECT_EQ(params.size(), 100u);
  for (double angle : params) {
    EXPECT_GE(angle, 0.0);
    EXPECT_LT(angle, 2.0 * std::numbers::pi);
  }

  Prng rng_again(21);
  EXPECT_EQ(params, sample_parameter_vector(spec, rng_again));

  // Mean of 1e5 draws vs pi; uniform std is 2*pi/sqrt(12).
  double mean = 0.0;
  const int draws = 100000;
  Prng mean_rng(22);
  for (int i = 0; i < draws; ++i) mean += mean_rng.angle();
  mean /= draws;
  const double tol = 3.0 * (2.0 * std::numbers::pi / std::sqrt(12.0)) / std::sqrt(draws);
  EXPECT_NEAR(mean, std::numbers::pi, tol);
}

TEST(SampleCircuitState, DispatchesOnFamily) {
  Prng rng(33);
  const StateVector pqc = sample_circuit_state(CircuitSpec::pqc(4, Topology::Star, 2), rng);
  EXPECT_LT(std::abs(pqc.norm_squared() - 1.0), 1e-10);
  const StateVector g3 = sample_circuit_state(CircuitSpec::g3(4, 30), rng);
  EXPECT_LT(std::abs(g3.norm_squared() - 1.0), 1e-10);
}

}  // namespace
}  // namespace qcx

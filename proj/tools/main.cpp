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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcx/experiments.hpp"
#include "qcx/serialize.hpp"
#include "qcx/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIoError = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

// Accepts "4", "4,8" and "1..10".
std::optional<std::vector<int>> parse_int_list(const std::string& text) {
  std::vector<int> values;
  const auto range_pos = text.find("..");
  try {
    if (range_pos != std::string::npos) {
      const int lo = std::stoi(text.substr(0, range_pos));
      const int hi = std::stoi(text.substr(range_pos + 2));
      if (hi < lo) return std::nullopt;
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      for (const std::string& part : split(text, ',')) values.push_back(std::stoi(part));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return values.empty() ? std::nullopt : std::make_optional(values);
}

std::string join_invocation(int argc, char** argv) {
  std::string text;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) text += " ";
    text += argv[i];
  }
  return text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QCOMPLEXITY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric QCOMPLEXITY_SEED\n";
    }
  }
  return 42;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

struct SweepFlags {
  std::string qubits = "4";
  std::string layers = "1..10";
  std::string topologies = "none,linear,ring,star";
  std::string families = "pqc,g3";
  std::string quantifiers = "all";
  int samples = 10000;
  int bins = 75;
  std::uint64_t seed = default_seed();
  std::string format = "csv";
  std::string out_dir = "results";
};

int run_sweep_command(const SweepFlags& flags, const std::string& invocation) {
  qcx::SweepConfig config;
  config.samples_per_point = flags.samples;
  config.n_bins = flags.bins;
  config.master_seed = flags.seed;

  if (flags.samples < 2 || flags.samples % 2 != 0) {
    return usage_error("--samples must be even (fidelities are taken over disjoint pairs)");
  }
  if (flags.bins < 1) return usage_error("--bins must be >= 1");
  if (flags.format != "csv" && flags.format != "json") {
    return usage_error("--format must be csv or json");
  }

  const auto qubits = parse_int_list(flags.qubits);
  if (!qubits) return usage_error("--qubits: expected an integer list like 4,8");
  config.qubits = *qubits;

  const auto layers = parse_int_list(flags.layers);
  if (!layers) return usage_error("--layers: expected a list or range like 1..10");
  config.layers = *layers;

  for (const std::string& name : split(flags.topologies, ',')) {
    const auto topology = qcx::parse_topology(name);
    if (!topology) return usage_error("--topologies: unknown topology '" + name + "'");
    config.topologies.push_back(*topology);
  }

  for (const std::string& name : split(flags.families, ',')) {
    if (name == "pqc") {
      config.families.push_back(qcx::CircuitFamily::Pqc);
    } else if (name == "g3") {
      config.families.push_back(qcx::CircuitFamily::G3);
    } else {
      return usage_error("--families: unknown family '" + name + "'");
    }
  }

  if (flags.quantifiers == "all") {
    config.quantifiers = {qcx::Quantifier::Expressibility, qcx::Quantifier::Majorization,
                          qcx::Quantifier::Entanglement};
  } else {
    for (const std::string& name : split(flags.quantifiers, ',')) {
      const auto quantifier = qcx::parse_quantifier(name);
      if (!quantifier) return usage_error("--quantifiers: unknown quantifier '" + name + "'");
      config.quantifiers.push_back(*quantifier);
    }
  }

  const std::vector<qcx::ResultRecord> records = qcx::run_sweep(config);
  for (const qcx::ResultRecord& record : records) {
    if (!record.error.empty()) {
      std::cerr << "diagnostic: " << record.family << " " << record.topology << " n="
                << record.n_qubits << " l=" << record.layers << " " << record.quantifier
                << ": " << record.error << "\n";
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(flags.out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory '" << flags.out_dir << "'\n";
    return kExitIoError;
  }

  auto write_file = [&](const std::string& name, const std::string& body) {
    const std::filesystem::path path = std::filesystem::path(flags.out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out) {
      std::cerr << "error: failed to write " << path.string() << "\n";
      return false;
    }
    std::cerr << "wrote " << path.string() << "\n";
    return true;
  };

  if (flags.format == "json") {
    return write_file("sweep.json", qcx::records_to_json(records, invocation))
               ? kExitOk
               : kExitIoError;
  }
  for (const qcx::Quantifier quantifier : config.quantifiers) {
    const std::string name = std::string(qcx::to_string(quantifier)) + ".csv";
    if (!write_file(name, qcx::records_to_csv(quantifier, records, invocation))) {
      return kExitIoError;
    }
  }
  return kExitOk;
}

struct QuantifyFlags {
  std::string family = "pqc";
  std::string topology = "ring";
  int qubits = 4;
  int layers = 0;
  int gates = 0;
  int samples = 10000;
  int bins = 75;
  std::uint64_t seed = default_seed();
  std::string format = "json";
};

int run_quantify_command(qcx::Quantifier quantifier, const QuantifyFlags& flags) {
  if (flags.samples < 2 || flags.samples % 2 != 0) {
    return usage_error("--samples must be even (fidelities are taken over disjoint pairs)");
  }
  if (flags.format != "csv" && flags.format != "json") {
    return usage_error("--format must be csv or json");
  }

  qcx::ResultRecord record;
  try {
    if (flags.family == "haar") {
      const std::uint64_t seed =
          qcx::record_seed(flags.seed, "haar", "", flags.qubits, 0, 0, quantifier);
      record = qcx::evaluate_haar(flags.qubits, quantifier, flags.samples, seed, flags.bins);
    } else if (flags.family == "pqc") {
      if (flags.layers < 1) return usage_error("pqc requires --layers >= 1");
      const auto topology = qcx::parse_topology(flags.topology);
      if (!topology) return usage_error("unknown topology '" + flags.topology + "'");
      const qcx::CircuitSpec spec = qcx::CircuitSpec::pqc(flags.qubits, *topology, flags.layers);
      const std::uint64_t seed =
          qcx::record_seed(flags.seed, "pqc", flags.topology, flags.qubits, flags.layers,
                           qcx::gate_count(spec).total, quantifier);
      record = qcx::evaluate_quantifier(spec, quantifier, flags.samples, flags.bins, seed);
    } else if (flags.family == "g3") {
      if (flags.gates < 1) return usage_error("g3 requires --gates >= 1");
      const qcx::CircuitSpec spec = qcx::CircuitSpec::g3(flags.qubits, flags.gates);
      const std::uint64_t seed =
          qcx::record_seed(flags.seed, "g3", "", flags.qubits, 0, flags.gates, quantifier);
      record = qcx::evaluate_quantifier(spec, quantifier, flags.samples, flags.bins, seed);
    } else {
      return usage_error("--family must be pqc, g3 or haar");
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  if (!record.error.empty()) {
    std::cerr << "error: " << record.error << "\n";
    return kExitUsage;
  }
  if (flags.format == "json") {
    std::cout << qcx::record_to_json(record);
  } else {
    std::cout << qcx::csv_header(quantifier) << "\n" << qcx::csv_rows(record);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(qcx::kToolName) +
               " - circuit ensembles and their complexity quantifiers"};
  app.set_version_flag("--version", std::string(qcx::kToolVersion));
  app.require_subcommand(1);

  SweepFlags sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Evaluate quantifiers over a (qubits x layers) grid");
  sweep_cmd->add_option("--qubits", sweep.qubits, "Qubit counts, e.g. 4 or 4,8");
  sweep_cmd->add_option("--layers", sweep.layers, "Layer list or range, e.g. 1..10");
  sweep_cmd->add_option("--topologies", sweep.topologies,
                        "Comma list of none,linear,ring,star");
  sweep_cmd->add_option("--families", sweep.families, "Comma list of pqc,g3");
  sweep_cmd->add_option("--quantifiers", sweep.quantifiers,
                        "all or comma list of expressibility,majorization,entanglement");
  sweep_cmd->add_option("--samples", sweep.samples, "Circuit samples per grid point (even)");
  sweep_cmd->add_option("--bins", sweep.bins, "Fidelity histogram bins");
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed (env QCOMPLEXITY_SEED overrides default)");
  sweep_cmd->add_option("--format", sweep.format, "csv or json");
  sweep_cmd->add_option("--out", sweep.out_dir, "Output directory");

  QuantifyFlags quantify;
  CLI::App* quantify_cmd =
      app.add_subcommand("quantify", "Evaluate one quantifier for one ensemble");
  quantify_cmd->require_subcommand(1);
  std::vector<std::pair<CLI::App*, qcx::Quantifier>> quantify_subs;
  for (const qcx::Quantifier quantifier :
       {qcx::Quantifier::Expressibility, qcx::Quantifier::Majorization,
        qcx::Quantifier::Entanglement}) {
    CLI::App* sub = quantify_cmd->add_subcommand(qcx::to_string(quantifier));
    sub->add_option("--family", quantify.family, "pqc, g3 or haar");
    sub->add_option("--topology", quantify.topology, "none, linear, ring or star (pqc)");
    sub->add_option("--qubits", quantify.qubits, "Qubit count");
    sub->add_option("--layers", quantify.layers, "Ansatz layers (pqc)");
    sub->add_option("--gates", quantify.gates, "Gate budget (g3)");
    sub->add_option("--samples", quantify.samples, "Circuit samples (even)");
    sub->add_option("--bins", quantify.bins, "Histogram bins (expressibility)");
    sub->add_option("--seed", quantify.seed, "Master seed");
    sub->add_option("--format", quantify.format, "json or csv");
    quantify_subs.emplace_back(sub, quantifier);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (sweep_cmd->parsed()) {
    return run_sweep_command(sweep, join_invocation(argc, argv));
  }
  for (const auto& [sub, quantifier] : quantify_subs) {
    if (sub->parsed()) return run_quantify_command(quantifier, quantify);
  }
  return usage_error("no subcommand given");
}

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

#include "qcx/serialize.hpp"

#include <cstdio>

#include <json.hpp>

#include "qcx/version.hpp"

namespace qcx {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string csv_header(Quantifier quantifier) {
  switch (quantifier) {
    case Quantifier::Expressibility:
      return "family,topology,qubits,layers,gates,samples,bins,seed,kl";
    case Quantifier::Majorization:
      return "family,topology,qubits,layers,gates,samples,seed,k,std_cumulant";
    case Quantifier::Entanglement:
      return "family,topology,qubits,layers,gates,samples,seed,mean_q,std_q,cue_mean,cue_std";
  }
  return "";
}

namespace {

std::string record_prefix(const ResultRecord& r) {
  return r.family + "," + r.topology + "," + std::to_string(r.n_qubits) + "," +
         std::to_string(r.layers) + "," + std::to_string(r.total_gates) + "," +
         std::to_string(r.samples);
}

}  // namespace

std::string csv_rows(const ResultRecord& r) {
  if (!r.error.empty()) return "";
  std::string out;
  const std::string seed = std::to_string(r.seed);
  if (r.quantifier == "expressibility") {
    out = record_prefix(r) + "," + std::to_string(r.n_bins) + "," + seed + "," +
          format_double(r.kl) + "\n";
  } else if (r.quantifier == "majorization") {
    for (std::size_t k = 0; k < r.std_per_k.size(); ++k) {
      out += record_prefix(r) + "," + seed + "," + std::to_string(k + 1) + "," +
             format_double(r.std_per_k[k]) + "\n";
    }
  } else if (r.quantifier == "entanglement") {
    out = record_prefix(r) + "," + seed + "," + format_double(r.mean_q) + "," +
          format_double(r.std_q) + "," + format_double(r.cue_mean) + "," +
          format_double(r.cue_std) + "\n";
  }
  return out;
}

std::string records_to_csv(Quantifier quantifier, std::span<const ResultRecord> records,
                           const std::string& invocation) {
  std::string out = "# ";
  out += kToolName;
  out += " ";
  out += kToolVersion;
  out += " | ";
  out += invocation;
  out += "\n";
  out += csv_header(quantifier);
  out += "\n";
  const char* name = to_string(quantifier);
  for (const ResultRecord& record : records) {
    if (record.quantifier == name) out += csv_rows(record);
  }
  return out;
}

namespace {

nlohmann::json record_json(const ResultRecord& r) {
  nlohmann::json j{
      {"family", r.family},   {"topology", r.topology}, {"qubits", r.n_qubits},
      {"layers", r.layers},   {"gates", r.total_gates}, {"quantifier", r.quantifier},
      {"samples", r.samples}, {"seed", r.seed},
  };
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  if (r.quantifier == "expressibility") {
    j["bins"] = r.n_bins;
    j["kl"] = r.kl;
  } else if (r.quantifier == "majorization") {
    j["std_cumulant"] = r.std_per_k;
  } else if (r.quantifier == "entanglement") {
    j["mean_q"] = r.mean_q;
    j["std_q"] = r.std_q;
    j["cue_mean"] = r.cue_mean;
    j["cue_std"] = r.cue_std;
  }
  return j;
}

}  // namespace

std::string records_to_json(std::span<const ResultRecord> records,
                            const std::string& invocation) {
  nlohmann::json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["invocation"] = invocation;
  doc["records"] = nlohmann::json::array();
  for (const ResultRecord& record : records) doc["records"].push_back(record_json(record));
  return doc.dump(2) + "\n";
}

std::string record_to_json(const ResultRecord& record) {
  return record_json(record).dump(2) + "\n";
}

}  // namespace qcx

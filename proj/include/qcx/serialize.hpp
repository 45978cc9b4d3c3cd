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

#ifndef QCX_SERIALIZE_HPP_
#define QCX_SERIALIZE_HPP_

#include <span>
#include <string>

#include "qcx/experiments.hpp"

namespace qcx {

/// Shortest representation that round-trips a double exactly (17
/// significant digits).
std::string format_double(double value);

/// Fixed, versioned column schema of a quantifier's CSV file.
std::string csv_header(Quantifier quantifier);

/// CSV rows of one record (majorization emits one row per cumulant index).
/// Diagnostic records produce no rows.
std::string csv_rows(const ResultRecord& record);

/// Complete CSV file: "# tool version | invocation" comment, header, then
/// rows of every non-diagnostic record matching `quantifier`.
std::string records_to_csv(Quantifier quantifier, std::span<const ResultRecord> records,
                           const std::string& invocation);

/// Complete JSON document mirroring the same records (diagnostics
/// included, with their error strings).
std::string records_to_json(std::span<const ResultRecord> records,
                            const std::string& invocation);

/// Single record rendered as JSON (same shape as one entry of the sweep
/// document).
std::string record_to_json(const ResultRecord& record);

}  // namespace qcx

#endif  // QCX_SERIALIZE_HPP_

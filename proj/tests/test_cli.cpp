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

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

struct CommandResult {
  int exit_code = -1;
  std::string stdout_text;
  std::string stderr_text;
};

// Runs the CLI through the shell, capturing exit code and both streams.
// `env_prefix` is prepended verbatim (e.g. "QCOMPLEXITY_SEED=9 ").
CommandResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "qcx_cli_test";
  fs::create_directories(dir);
  const fs::path out_path = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err_path = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;

  const std::string command = env_prefix + std::string(QCX_CLI_PATH) + " " + args + " >" +
                              out_path.string() + " 2>" + err_path.string();
  const int status = std::system(command.c_str());

  auto slurp = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  };

  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.stdout_text = slurp(out_path);
  result.stderr_text = slurp(err_path);
  return result;
}

std::string slurp_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qcx_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(CliSweep, WritesOneCsvPerQuantifier) {
  const fs::path out = fresh_dir("sweep_csv");
  const CommandResult result = run_cli(
      "sweep --qubits 4 --layers 1..2 --topologies ring,none --families pqc,g3 "
      "--quantifiers all --samples 200 --bins 75 --seed 42 --format csv --out " +
      out.string());
  ASSERT_EQ(result.exit_code, 0) << result.stderr_text;

  for (const std::string name : {"expressibility.csv", "majorization.csv",
                                 "entanglement.csv"}) {
    const fs::path file = out / name;
    ASSERT_TRUE(fs::exists(file)) << name;
    const std::string body = slurp_file(file);
    EXPECT_EQ(body.rfind("# qcomplexity 1.0.0 | ", 0), 0u) << name;
    EXPECT_NE(body.find("--seed 42"), std::string::npos) << name;
  }

  const std::string entanglement = slurp_file(out / "entanglement.csv");
  EXPECT_NE(entanglement.find(
                "family,topology,qubits,layers,gates,samples,seed,mean_q,std_q,cue_mean,"
                "cue_std"),
            std::string::npos);
  EXPECT_NE(entanglement.find("pqc,ring,4,1,12,200,"), std::string::npos);
  EXPECT_NE(entanglement.find("haar,,4,0,0,200,"), std::string::npos);
  // NoConnections rows report exactly zero entanglement.
  EXPECT_NE(entanglement.find(",0,0,"), std::string::npos);
}

TEST(CliSweep, RerunsAreByteIdenticalAcrossThreadCounts) {
  const fs::path out_a = fresh_dir("rerun_a");
  const fs::path out_b = fresh_dir("rerun_b");
  const std::string flags =
      "sweep --qubits 4 --layers 1..2 --topologies ring --families pqc,g3 "
      "--quantifiers entanglement,majorization --samples 200 --seed 7 --format csv --out ";
  ASSERT_EQ(run_cli(flags + out_a.string(), "OMP_NUM_THREADS=1 ").exit_code, 0);
  ASSERT_EQ(run_cli(flags + out_b.string(), "OMP_NUM_THREADS=3 ").exit_code, 0);

  for (const std::string name : {"entanglement.csv", "majorization.csv"}) {
    const std::string body_a = slurp_file(out_a / name);
    const std::string body_b = slurp_file(out_b / name);
    ASSERT_FALSE(body_a.empty());
    // The invocation comment differs only in the --out path; compare the rest.
    EXPECT_EQ(body_a.substr(body_a.find('\n')), body_b.substr(body_b.find('\n'))) << name;
  }
}

TEST(CliSweep, OddSampleCountIsUsageError) {
  const fs::path out = fresh_dir("odd_samples");
  const CommandResult result =
      run_cli("sweep --qubits 4 --samples 7 --out " + out.string());
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.stderr_text.find("even"), std::string::npos);
}

TEST(CliSweep, UnwritableOutputDirIsIoError) {
  const fs::path blocker = fs::temp_directory_path() / "qcx_cli_test" / "blocker";
  fs::create_directories(blocker.parent_path());
  std::ofstream(blocker, std::ios::binary) << "occupied";
  const CommandResult result = run_cli(
      "sweep --qubits 4 --layers 1 --topologies ring --families pqc --quantifiers "
      "entanglement --samples 10 --out " +
      (blocker / "nested").string());
  EXPECT_EQ(result.exit_code, 1);
}

TEST(CliSweep, RejectsUnknownFlagAndTopology) {
  EXPECT_EQ(run_cli("sweep --no-such-flag").exit_code, 2);
  EXPECT_EQ(run_cli("sweep --qubits 4 --topologies hexagon").exit_code, 2);
  EXPECT_EQ(run_cli("quantify entanglement --family mps").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
}

TEST(CliSweep, JsonFormatProducesOneParsableDocument) {
  const fs::path out = fresh_dir("sweep_json");
  const CommandResult result = run_cli(
      "sweep --qubits 4 --layers 1 --topologies ring --families pqc --quantifiers "
      "entanglement --samples 100 --seed 5 --format json --out " +
      out.string());
  ASSERT_EQ(result.exit_code, 0) << result.stderr_text;
  const nlohmann::json doc = nlohmann::json::parse(slurp_file(out / "sweep.json"));
  EXPECT_EQ(doc["tool"], "qcomplexity");
  EXPECT_EQ(doc["version"], "1.0.0");
  ASSERT_GE(doc["records"].size(), 1u);
  EXPECT_EQ(doc["records"][0]["quantifier"], "entanglement");
}

TEST(CliQuantify, EmitsEntanglementRecordWithCueReferences) {
  const CommandResult result = run_cli(
      "quantify entanglement --family pqc --topology ring --qubits 4 --layers 5 "
      "--samples 2000 --seed 7");
  ASSERT_EQ(result.exit_code, 0) << result.stderr_text;
  const nlohmann::json record = nlohmann::json::parse(result.stdout_text);
  EXPECT_TRUE(record.contains("mean_q"));
  EXPECT_TRUE(record.contains("std_q"));
  EXPECT_NEAR(record["cue_mean"].get<double>(), 14.0 / 17.0, 1e-12);
  EXPECT_TRUE(record.contains("cue_std"));
  EXPECT_EQ(record["gates"], 60);
}

TEST(CliQuantify, MajorizationCsvHasOneRowPerCumulant) {
  const CommandResult result = run_cli(
      "quantify majorization --family g3 --qubits 4 --gates 96 --samples 2000 --seed 7 "
      "--format csv");
  ASSERT_EQ(result.exit_code, 0) << result.stderr_text;
  const int lines = static_cast<int>(
      std::count(result.stdout_text.begin(), result.stdout_text.end(), '\n'));
  EXPECT_EQ(lines, 17);  // header + 16 cumulant rows
  EXPECT_EQ(result.stdout_text.rfind("family,topology,qubits,layers,gates,samples,seed,k,"
                                     "std_cumulant\n",
                                     0),
            0u);
  EXPECT_NE(result.stdout_text.find("g3,,4,0,96,2000,"), std::string::npos);
}

TEST(CliQuantify, NoConnectionsExpressibilityStaysLarge) {
  const CommandResult result = run_cli(
      "quantify expressibility --family pqc --topology none --qubits 4 --layers 10 "
      "--samples 2000 --seed 7");
  ASSERT_EQ(result.exit_code, 0) << result.stderr_text;
  const nlohmann::json record = nlohmann::json::parse(result.stdout_text);
  EXPECT_GT(record["kl"].get<double>(), 0.1);
}

TEST(CliQuantify, EnvironmentSeedOverridesDefault) {
  const std::string base =
      "quantify entanglement --family pqc --topology ring --qubits 4 --layers 1 "
      "--samples 200";

  // Without flags or env the built-in default seed (42) applies.
  const CommandResult defaulted = run_cli(base);
  const CommandResult explicit_42 = run_cli(base + " --seed 42");
  ASSERT_EQ(defaulted.exit_code, 0);
  EXPECT_EQ(defaulted.stdout_text, explicit_42.stdout_text);

  // QCOMPLEXITY_SEED replaces that default.
  const CommandResult env_override = run_cli(base, "QCOMPLEXITY_SEED=9 ");
  const CommandResult explicit_9 = run_cli(base + " --seed 9");
  ASSERT_EQ(env_override.exit_code, 0);
  EXPECT_EQ(env_override.stdout_text, explicit_9.stdout_text);
  EXPECT_NE(env_override.stdout_text, explicit_42.stdout_text);
}

}  // namespace

// Copyright 2026 The hv Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HV_TOOLS_EXPERIMENTS_HPP
#define HV_TOOLS_EXPERIMENTS_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hv::cli {

using json = nlohmann::json;

inline constexpr const char *kSchema = "hv.experiment/1";

enum ExitCode { kExitPass = 0, kExitConfig = 1, kExitCriterion = 2 };

struct Criterion {
  std::string name;
  bool pass;
  double value;
  double threshold;
  std::string detail;
};

struct Outcome {
  json metrics = json::object();
  std::vector<Criterion> criteria;
  std::vector<std::string> files;
};

struct ExperimentKind {
  std::string name;
  std::string description;
  /// Every accepted key with its default; null marks an optional literal.
  json defaults;
  std::function<Outcome(const json &config, const std::filesystem::path &out)>
      run;
};

const std::vector<ExperimentKind> &experiment_kinds();

/// Validates a raw config and materializes defaults. Throws ConfigInvalid.
json resolve_config(const json &raw);

/// Applies `key.path=value` (value parsed as JSON, else taken as a string).
void apply_override(json &config, const std::string &assignment);

/// Loads, resolves, runs and writes report.json plus CSVs into `out`.
/// Returns the process exit code; diagnostics go to `err`.
int run(const std::filesystem::path &config_path,
        const std::filesystem::path &out, std::optional<std::uint64_t> seed,
        const std::vector<std::string> &overrides, std::ostream &log,
        std::ostream &err);

/// Same, from an in-memory config.
int run_config(json raw, const std::filesystem::path &out, std::ostream &log,
               std::ostream &err);

/// Listing of kinds, their keys and descriptions.
json list_json();
std::string list_table();

}  // namespace hv::cli

#endif  // HV_TOOLS_EXPERIMENTS_HPP

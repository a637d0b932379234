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

// hv: batch runner for hidden-variable experiments.
//
//   hv run <config.json> [--out DIR] [--seed K] [--set key=value]...
//   hv list [--json]
//
// Exit codes: 0 all criteria pass, 1 usage or config error, 2 a criterion
// failed. HV_THREADS caps the number of worker threads.

#include <iostream>

#include <CLI11.hpp>

#include "experiments.hpp"

int main(int argc, char **argv) {
  CLI::App app{"hv: hidden-variable quantum mechanics experiments"};
  app.require_subcommand(1);

  auto *run = app.add_subcommand("run", "Run one experiment from a JSON config");
  std::string config;
  std::string out = "hv-out";
  std::optional<std::uint64_t> seed;
  std::vector<std::string> sets;
  run->add_option("config", config, "Experiment config (JSON)")->required();
  run->add_option("--out", out, "Output directory")->capture_default_str();
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--set", sets, "Override a config key: key.path=value")
      ->take_all()
      ->allow_extra_args(false);

  auto *list = app.add_subcommand("list", "List experiment kinds");
  bool as_json = false;
  list->add_flag("--json", as_json, "Machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return hv::cli::kExitConfig;
  }

  if (*list) {
    if (as_json) {
      std::cout << hv::cli::list_json().dump(2) << '\n';
    } else {
      std::cout << hv::cli::list_table();
    }
    return hv::cli::kExitPass;
  }
  return hv::cli::run(config, out, seed, sets, std::cout, std::cerr);
}

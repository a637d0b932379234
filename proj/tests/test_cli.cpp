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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "experiments.hpp"
#include "helpers.hpp"
#include "hv/errors.hpp"
#include "hv/literals.hpp"

using namespace hv;
using hv::cli::json;
using hv::testing::max_abs;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
  const fs::path p = fs::temp_directory_path() /
                     ("hv-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json load(const fs::path &p) { return json::parse(slurp(p)); }

int quiet_run(const json &raw, const fs::path &out, std::string *err_text = nullptr) {
  std::ostringstream log;
  std::ostringstream err;
  const int code = cli::run_config(raw, out, log, err);
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("operator literals") {
  using literals::parse_operator;
  CHECK(max_abs(parse_operator("sigma_x", 2).matrix() -
                HermitianOperator::pauli_x().matrix()) == 0.0);
  CHECK(max_abs(parse_operator("identity", 3).matrix() - ComplexMatrix::Identity(3, 3)) == 0.0);
  CHECK(max_abs(parse_operator(json{{"diag", {1, -2}}}, 2).matrix() -
                HermitianOperator::diag({1, -2}).matrix()) == 0.0);
  const HermitianOperator e =
      parse_operator(json::parse(R"({"entries": [[1, [0, -1]], [[0, 1], 2]]})"), 2);
  CHECK(e.matrix()(0, 1) == Complex(0, -1));
  const HermitianOperator s =
      parse_operator(json::parse(R"({"eigenvalues": [3, -1, 0.5], "seed": 4})"), 3);
  CHECK(max_abs(s.matrix() - parse_operator(json::parse(R"({"eigenvalues": [3, -1, 0.5], "seed": 4})"), 3).matrix()) == 0.0);
  const std::vector<double> ev = spectral_decompose(s).eigenvalues();
  REQUIRE(ev.size() == 3);
  CHECK(std::abs(ev[0] + 1) <= 1e-10);
  CHECK(std::abs(ev[2] - 3) <= 1e-10);
  CHECK(parse_operator(json::parse(R"({"projector": [1, 1]})"), 2).is_projector());

  CHECK_THROWS_AS(parse_operator("sigma_x", 3), ConfigInvalid);
  CHECK_THROWS_AS(parse_operator("bogus", 2), ConfigInvalid);
  CHECK_THROWS_AS(parse_operator(json::parse(R"({"entries": [[0, 1], [0, 0]]})"), 2), ConfigInvalid);
  CHECK_THROWS_AS(parse_operator(json::parse(R"({"diag": [1, 2], "extra": 1})"), 2), ConfigInvalid);
  CHECK_THROWS_AS(parse_operator(json{{"diag", {1, 2, 3}}}, 2), ConfigInvalid);
}

TEST_CASE("state, context and set literals") {
  using namespace literals;
  const StateVector a = parse_state(json::parse(R"({"amplitudes": [3, [0, 4]]})"), 2);
  CHECK(std::abs(a.coords().norm() - kSqrt2) <= 1e-15);
  CHECK(std::abs(a.coords()[0] - 0.6 * kSqrt2) <= 1e-15);
  CHECK(max_abs(parse_state(json{{"basis", 1}}, 3).coords() -
                StateVector::basis(3, 1).coords()) == 0.0);
  CHECK(max_abs(parse_state(json{{"random", 5}}, 3).coords() -
                parse_state(json{{"random", 5}}, 3).coords()) == 0.0);
  CHECK_THROWS_AS(parse_state(json{{"basis", 3}}, 3), ConfigInvalid);
  CHECK_THROWS_AS(parse_state(json::parse(R"({"amplitudes": [0, 0]})"), 2), ConfigInvalid);

  CHECK(parse_context(nullptr).is_identity());
  const Context r = parse_context(json::parse(R"({"rigid": {"offset": 1.5}})"));
  const StateVector phi = StateVector::basis(2, 0);
  CHECK(std::abs(r.forward(0.2, phi) - 1.7) <= 1e-15);
  CHECK_NOTHROW(parse_context(json::parse(R"({"exchange": {"k": 3, "perm": [2, 0, 1]}})")));
  CHECK_THROWS_AS(parse_context(json::parse(R"({"exchange": {"k": 2, "perm": [2, 0, 1]}})")),
                  ConfigInvalid);
  CHECK_THROWS_AS(parse_context(json::parse(R"({"exchange": {"k": 2, "perm": [0, 0]}})")),
                  ConfigInvalid);
  CHECK_THROWS_AS(parse_context("spin"), ConfigInvalid);

  const BorelSet b = parse_borel(json::parse(R"([{"points": [1]}, {"half_open": [2, 3]}])"));
  CHECK(b.contains(1));
  CHECK(!b.contains(2));
  CHECK(b.contains(3));
  CHECK(parse_borel("all").contains(-1e300));
  CHECK(parse_borel(json{{"at_most", 0}}).contains(0));
  CHECK(!parse_borel(json{{"at_most", 0}}).contains(1e-300));
  CHECK_THROWS_AS(parse_borel(json{{"closed", {3, 1}}}), ConfigInvalid);
}

TEST_CASE("resolve_config materializes defaults and rejects unknown keys") {
  const json c = cli::resolve_config(json::parse(R"({"schema": "hv.experiment/1", "kind": "born"})"));
  CHECK(c.at("schema") == cli::kSchema);
  CHECK(c.at("samples") == 100000);
  CHECK(c.at("seed") == 0);
  for (const cli::ExperimentKind &k : cli::experiment_kinds()) {
    const json d = cli::resolve_config(json{{"schema", cli::kSchema}, {"kind", k.name}});
    for (const auto &[key, value] : k.defaults.items()) CHECK(d.contains(key));
  }
  CHECK_THROWS_AS(cli::resolve_config(json::parse(R"({"schema": "hv.experiment/1", "n": 2})")), ConfigInvalid);
  CHECK_THROWS_AS(cli::resolve_config(json::parse(R"({"schema": "hv.experiment/1", "kind": "tarot"})")), ConfigInvalid);
  CHECK_THROWS_AS(cli::resolve_config(json::parse(R"({"schema": "hv.experiment/1", "kind": "born", "sampels": 3})")),
                  ConfigInvalid);
  CHECK_THROWS_AS(cli::resolve_config(json::parse(R"({"kind": "born", "schema": "v0"})")),
                  ConfigInvalid);
  CHECK_THROWS_AS(cli::resolve_config(json::parse(R"([1, 2])")), ConfigInvalid);
  CHECK_THROWS_AS(cli::resolve_config(json::parse(R"({"kind": "born"})")), ConfigInvalid);
}

TEST_CASE("overrides") {
  json c = {{"kind", "born"}, {"state", {{"amplitudes", {1, 1}}}}};
  cli::apply_override(c, "samples=500");
  cli::apply_override(c, "state.amplitudes=[1,0]");
  cli::apply_override(c, "id=plain text");
  CHECK(c.at("samples") == 500);
  CHECK(c.at("state").at("amplitudes") == json::array({1, 0}));
  CHECK(c.at("id") == "plain text");
  CHECK_THROWS_AS(cli::apply_override(c, "novalue"), ConfigInvalid);
}

TEST_CASE("eight kinds are listed") {
  CHECK(cli::experiment_kinds().size() == 8);
  const json l = cli::list_json();
  CHECK(l.at("kinds").size() == 8);
  const std::string table = cli::list_table();
  for (const char *k : {"born", "dynamics", "uncertainty", "context", "partition",
                        "independence", "frame", "factorize"}) {
    CHECK(table.find(k) != std::string::npos);
  }
}

TEST_CASE("born run writes a report echoing the resolved config") {
  const fs::path out = scratch("born");
  const json raw = load(fs::path(HV_SOURCE_DIR) / "configs" / "born.json");
  REQUIRE(quiet_run(raw, out) == cli::kExitPass);
  const json report = load(out / "report.json");
  CHECK(report.at("metrics").at("p_exact") == 0.5);
  CHECK(report.at("config") == cli::resolve_config(raw));
  CHECK(report.at("pass") == true);
  CHECK(fs::exists(out / "born.csv"));
  CHECK(slurp(out / "born.csv").rfind("experiment_id,n,seed,p_exact,p_hat,stderr,pass\n", 0) == 0);
  fs::remove_all(out);
}

TEST_CASE("exit codes") {
  const fs::path out = scratch("codes");
  std::string err;
  CHECK(quiet_run(json::parse(R"({"schema": "hv.experiment/1", "n": 2})"), out, &err) == cli::kExitConfig);
  CHECK(err.find("kind") != std::string::npos);
  CHECK(quiet_run(json::parse(R"({"schema": "hv.experiment/1", "kind": "born", "bogus": 1})"), out) == cli::kExitConfig);
  CHECK(quiet_run(json::parse(R"({"schema": "hv.experiment/1", "kind": "born", "operator": "sigma_q"})"), out) ==
        cli::kExitConfig);
  json big_step = load(fs::path(HV_SOURCE_DIR) / "configs" / "dynamics.json");
  big_step["step"] = 0.5;
  CHECK(quiet_run(big_step, out) == cli::kExitCriterion);
  CHECK(load(out / "report.json").at("pass") == false);

  std::ostringstream log;
  std::ostringstream e2;
  CHECK(cli::run(out / "does-not-exist.json", out, std::nullopt, {}, log, e2) ==
        cli::kExitConfig);
  fs::remove_all(out);
}

TEST_CASE("every shipped config passes and is byte-reproducible") {
  for (const auto &entry : fs::directory_iterator(fs::path(HV_SOURCE_DIR) / "configs")) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().filename().string());
    const fs::path a = scratch("a");
    const fs::path b = scratch("b");
    std::ostringstream log;
    std::ostringstream err;
    setenv("HV_THREADS", "1", 1);
    CHECK(cli::run(entry.path(), a, 5, {}, log, err) == cli::kExitPass);
    setenv("HV_THREADS", "4", 1);
    CHECK(cli::run(entry.path(), b, 5, {}, log, err) == cli::kExitPass);
    unsetenv("HV_THREADS");
    const json report = load(a / "report.json");
    CHECK(report.at("config").at("seed") == 5);
    for (const auto &file : report.at("files")) {
      const std::string name = file.get<std::string>();
      CAPTURE(name);
      CHECK(!slurp(a / name).empty());
      CHECK(slurp(a / name) == slurp(b / name));
    }
    fs::remove_all(a);
    fs::remove_all(b);
  }
}

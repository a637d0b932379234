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

#include "experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "hv/dynamics.hpp"
#include "hv/errors.hpp"
#include "hv/geometry.hpp"
#include "hv/hidden.hpp"
#include "hv/literals.hpp"
#include "hv/logic.hpp"
#include "hv/measure.hpp"

namespace hv::cli {

namespace fs = std::filesystem;
using namespace hv::literals;

namespace {

// ---------------------------------------------------------------------------
// Output helpers. Numbers go through std::to_chars: shortest round-trip form,
// '.' decimal point regardless of locale.

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string num(long long x) { return std::to_string(x); }
std::string num(int x) { return std::to_string(x); }
std::string flag(bool b) { return b ? "1" : "0"; }

class Csv {
 public:
  Csv(const fs::path &path, const std::vector<std::string> &header)
      : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw ConfigInvalid("cannot write " + path.string());
    row(header);
  }

  void row(const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

Criterion at_most(std::string name, double value, double threshold,
                  std::string detail = {}) {
  return {std::move(name), value <= threshold, value, threshold, std::move(detail)};
}

Criterion at_least(std::string name, double value, double threshold,
                   std::string detail = {}) {
  return {std::move(name), value >= threshold, value, threshold, std::move(detail)};
}

long get_int(const json &c, const char *key, long lo,
             long hi = std::numeric_limits<long>::max()) {
  const json &v = c.at(key);
  if (!v.is_number_integer()) {
    throw ConfigInvalid(std::string(key) + ": expected an integer");
  }
  const long x = v.get<long>();
  if (x < lo || x > hi) {
    throw ConfigInvalid(std::string(key) + ": " + std::to_string(x) +
                        " out of range [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }
  return x;
}

double get_real(const json &c, const char *key, double lo = -1e300) {
  const json &v = c.at(key);
  if (!v.is_number()) throw ConfigInvalid(std::string(key) + ": expected a number");
  const double x = v.get<double>();
  if (!(x >= lo)) {
    throw ConfigInvalid(std::string(key) + ": must be >= " + num(lo));
  }
  return x;
}

bool get_bool(const json &c, const char *key) {
  const json &v = c.at(key);
  if (!v.is_boolean()) throw ConfigInvalid(std::string(key) + ": expected a boolean");
  return v.get<bool>();
}

int dim(const json &c) { return static_cast<int>(get_int(c, "n", 1, 64)); }

std::uint64_t seed(const json &c) {
  return static_cast<std::uint64_t>(get_int(c, "seed", 0));
}

void state_columns(std::vector<std::string> &row, const StateVector &phi) {
  for (Eigen::Index i = 0; i < phi.coords().size(); ++i) {
    row.push_back(num(phi.coords()[i]));
  }
}

/// Orthonormal columns of a Haar unitary split into `k` non-empty groups.
std::vector<HermitianOperator> random_resolution(int n, int k,
                                                 std::mt19937_64 &rng) {
  const ComplexMatrix u = random_unitary(n, rng);
  std::vector<int> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<HermitianOperator> out;
  int begin = 0;
  for (int end : cuts) {
    const ComplexMatrix cols = u.middleCols(begin, end - begin);
    out.emplace_back(cols * cols.adjoint());
    begin = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// born

Outcome run_born(const json &c, const fs::path &out) {
  const int n = dim(c);
  const HermitianOperator t = parse_operator(c.at("operator"), n);
  const StateVector phi = parse_state(c.at("state"), n);
  const Context nu = parse_context(c.at("context"));
  const BorelSet b = parse_borel(c.at("set"));
  const long samples = get_int(c, "samples", 1);
  const long runs = get_int(c, "runs", 1);
  const double fraction = get_real(c, "min_pass_fraction", 0.0);
  if (fraction > 1.0) throw ConfigInvalid("min_pass_fraction: must be <= 1");

  const HiddenObservable f(t, {}, nu);
  const double p = born_exact(phi, f, b);
  const double oracle = expect(spectral_projector(f.decomposition(), b), phi);
  const double bound = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));

  Outcome o;
  Csv csv(out / "born.csv",
          {"experiment_id", "n", "seed", "p_exact", "p_hat", "stderr", "pass"});
  o.files.push_back("born.csv");
  const Ray ray(phi);
  const std::string id = c.at("id").get<std::string>();
  long passes = 0;
  double first_hat = 0.0;
  double worst = 0.0;
  for (long r = 0; r < runs; ++r) {
    const std::uint64_t s = seed(c) + static_cast<std::uint64_t>(r);
    const MonteCarloEstimate est = born_monte_carlo(ray, f, b, samples, PhaseSampler(s));
    const double err = std::abs(est.frequency - p);
    const bool ok = err <= bound;
    passes += ok;
    worst = std::max(worst, err);
    if (r == 0) first_hat = est.frequency;
    csv.row({id, num(n), std::to_string(s), num(p), num(est.frequency),
             num(est.stderr_), flag(ok)});
  }
  const long required =
      static_cast<long>(std::ceil(fraction * static_cast<double>(runs) - 1e-9));
  o.metrics = {{"p_exact", p},           {"p_projector", oracle},
               {"p_hat", first_hat},     {"bound_3sigma", bound},
               {"max_abs_error", worst}, {"runs", runs},
               {"runs_within_bound", passes}};
  o.criteria.push_back(at_most("born_exact_equals_projector_expectation",
                               std::abs(p - oracle), 1e-12));
  o.criteria.push_back(at_least("monte_carlo_within_3sigma",
                                static_cast<double>(passes),
                                static_cast<double>(required),
                                std::to_string(passes) + "/" + std::to_string(runs)));
  return o;
}

// ---------------------------------------------------------------------------
// dynamics

Outcome run_dynamics(const json &c, const fs::path &out) {
  const int n = dim(c);
  const HermitianOperator a = parse_operator(c.at("operator"), n);
  const PhaseSpeed h = parse_phase_speed(c.at("phase_speed"), n);
  const StateVector phi = parse_state(c.at("state"), n);
  const double t_max = get_real(c, "t_max", 0.0);
  const double step = get_real(c, "step", 0.0);
  const double quad_tol = get_real(c, "quad_tol", 0.0);
  const double tol_dev = get_real(c, "tol_deviation", 0.0);
  const double tol_energy = get_real(c, "tol_energy", 0.0);
  const long grid = get_int(c, "projective_grid", 2, 100000);
  if (!(step > 0.0) || !(quad_tol > 0.0)) {
    throw ConfigInvalid("step and quad_tol must be positive");
  }

  const HamiltonianSystem sys(a, h);
  Outcome o;
  FlowResult flow;
  try {
    flow = integrate_field(sys, t_max, phi, step, quad_tol);
  } catch (const StepTooLarge &e) {
    o.metrics = {{"integrator_error", e.what()}};
    o.criteria.push_back({"integrator_deviation", false,
                          std::numeric_limits<double>::infinity(), tol_dev,
                          e.what()});
    return o;
  }

  Csv csv(out / "trajectory.csv", [&] {
    std::vector<std::string> header{"t"};
    for (int i = 0; i < n; ++i) header.push_back("re" + std::to_string(i));
    for (int i = 0; i < n; ++i) header.push_back("im" + std::to_string(i));
    header.push_back("expect_A");
    header.push_back("ray_distance_to_t0");
    return header;
  }());
  o.files.push_back("trajectory.csv");
  double sphere = 0.0;
  for (std::size_t j = 0; j < flow.states.size(); ++j) {
    const StateVector &s = flow.states[j];
    sphere = std::max(sphere, std::abs(s.coords().norm() - kSqrt2));
    std::vector<std::string> row{num(flow.times[j])};
    state_columns(row, s);
    row.push_back(num(expect(a, s)));
    row.push_back(num(ray_distance(s, phi)));
    csv.row(row);
  }

  std::vector<double> times;
  for (long j = 0; j < grid; ++j) {
    times.push_back(t_max * static_cast<double>(j) / static_cast<double>(grid - 1));
  }
  const ProjectiveComparison vs0 = projective_compare(
      sys, HamiltonianSystem(a, PhaseSpeed::constant(0.0)), times, phi, quad_tol);
  const ProjectiveComparison vs5 = projective_compare(
      sys, HamiltonianSystem(a, PhaseSpeed::constant(5.0)), times, phi, quad_tol);

  o.metrics = {{"steps", static_cast<long>(flow.states.size()) - 1},
               {"max_deviation", flow.max_deviation},
               {"max_energy_drift", flow.max_energy_drift},
               {"max_sphere_error", sphere},
               {"projective_distance_h0", vs0.max_ray_distance},
               {"projective_distance_h5", vs5.max_ray_distance}};
  o.criteria.push_back(at_most("integrator_deviation", flow.max_deviation, tol_dev));
  o.criteria.push_back(at_most("energy_conservation", flow.max_energy_drift, tol_energy));
  o.criteria.push_back(at_most("sphere_preservation", sphere, 1e-9));
  o.criteria.push_back(at_most("projective_h_independence",
                               std::max(vs0.max_ray_distance, vs5.max_ray_distance),
                               1e-9));
  return o;
}

// ---------------------------------------------------------------------------
// uncertainty

Outcome run_uncertainty(const json &c, const fs::path &out) {
  const int n = dim(c);
  const long samples = get_int(c, "samples", 1);
  std::optional<HermitianOperator> fixed_a;
  std::optional<HermitianOperator> fixed_b;
  if (!c.at("A").is_null()) fixed_a = parse_operator(c.at("A"), n, "A");
  if (!c.at("B").is_null()) fixed_b = parse_operator(c.at("B"), n, "B");

  std::mt19937_64 rng(seed(c));
  Outcome o;
  Csv csv(out / "uncertainty.csv",
          {"index", "lhs", "rhs_strong", "rhs_weak", "jordan_error",
           "poisson_error", "dispersion_moment", "dispersion_gradient",
           "dispersion_arcs", "pass"});
  o.files.push_back("uncertainty.csv");
  long violations = 0;
  double jordan_err = 0.0;
  double poisson_err = 0.0;
  double disp_err = 0.0;
  for (long k = 0; k < samples; ++k) {
    const HermitianOperator a = fixed_a ? *fixed_a : random_hermitian(n, rng);
    const HermitianOperator b = fixed_b ? *fixed_b : random_hermitian(n, rng);
    const StateVector phi = random_state(n, rng);
    const KaehlerFunction h(a);
    const KaehlerFunction l(b);
    const HeisenbergCheck hc = heisenberg_check(h, l, phi);
    const double je = std::abs(jordan(h, l, phi) - expect(jordan_product(a, b), phi));
    const double pe = std::abs(poisson(h, l, phi) - expect(lie_product(a, b), phi));
    const double d1 = dispersion(h, phi);
    const double d2 = dispersion_from_gradient(h, phi);
    const double d3 = dispersion_from_arcs(HiddenObservable(a), phi);
    const double de = std::max({std::abs(d1 - d2), std::abs(d1 - d3), std::abs(d2 - d3)});
    violations += !hc.pass;
    jordan_err = std::max(jordan_err, je);
    poisson_err = std::max(poisson_err, pe);
    disp_err = std::max(disp_err, de);
    csv.row({num(static_cast<long long>(k)), num(hc.lhs), num(hc.rhs_strong),
             num(hc.rhs_weak), num(je), num(pe), num(d1), num(d2), num(d3),
             flag(hc.pass)});
  }
  o.metrics = {{"samples", samples},
               {"heisenberg_violations", violations},
               {"max_jordan_error", jordan_err},
               {"max_poisson_error", poisson_err},
               {"max_dispersion_disagreement", disp_err}};
  o.criteria.push_back(at_most("heisenberg_no_violation",
                               static_cast<double>(violations), 0.0));
  o.criteria.push_back(at_most("jordan_operator_identity", jordan_err, 1e-10));
  o.criteria.push_back(at_most("poisson_operator_identity", poisson_err, 1e-10));
  o.criteria.push_back(at_most("dispersion_three_forms_agree", disp_err, 1e-10));
  return o;
}

// ---------------------------------------------------------------------------
// context

Outcome run_context(const json &c, const fs::path &out) {
  const int n = dim(c);
  const HermitianOperator e = parse_operator(c.at("projector"), n, "projector");
  const json &ctxs = c.at("contexts");
  if (!ctxs.is_array() || ctxs.size() != 2) {
    throw ConfigInvalid("contexts: expected exactly two context literals");
  }
  const Context first = parse_context(ctxs[0], "contexts[0]");
  const Context second = parse_context(ctxs[1], "contexts[1]");
  const long budget = get_int(c, "budget", 1);
  const bool expect_witness = get_bool(c, "expect_witness");

  std::vector<StateVector> rays;
  if (!c.at("state").is_null()) {
    rays.push_back(parse_state(c.at("state"), n));
  } else {
    std::mt19937_64 rng(seed(c));
    for (long r = 0; r < (budget + 15) / 16; ++r) rays.push_back(random_state(n, rng));
  }
  const std::optional<ContextualityWitness> w = contextuality_witness(
      e, {}, first, second, rays, static_cast<int>(budget));

  const Proposition l1 = proposition_of(e, {}, first);
  const Proposition l2 = proposition_of(e, {}, second);
  double measure_err = 0.0;
  for (const StateVector &r : rays) {
    const double p = expect(e, r);
    measure_err = std::max({measure_err, std::abs(l1.orbit_measure(r) - p),
                            std::abs(l2.orbit_measure(r) - p)});
  }

  Outcome o;
  Csv csv(out / "context.csv", {"phase", "expect_E", "value_first", "value_second"});
  o.files.push_back("context.csv");
  const StateVector shown = section(w ? w->state : rays.front());
  for (int j = 0; j < 16; ++j) {
    const double u = -kPi + (j + 0.5) * kTwoPi / 16;
    const StateVector phi = rotate(shown, u);
    csv.row({num(u), num(expect(e, phi)), flag(member(l1, phi)), flag(member(l2, phi))});
  }

  o.metrics = {{"witness_found", w.has_value()}, {"max_measure_error", measure_err}};
  if (w) {
    o.metrics["witness"] = {{"phase", w->phase},
                            {"value_first", w->value_first},
                            {"value_second", w->value_second},
                            {"sample_index", w->sample_index},
                            {"expect_E", expect(e, w->state)}};
  }
  o.criteria.push_back({"witness_matches_expectation", w.has_value() == expect_witness,
                        w ? 1.0 : 0.0, expect_witness ? 1.0 : 0.0,
                        w ? "witness found" : "no witness within budget"});
  o.criteria.push_back(at_most("context_preserves_measure", measure_err, 1e-12));
  return o;
}

// ---------------------------------------------------------------------------
// partition

Outcome run_partition(const json &c, const fs::path &out) {
  const int n = dim(c);
  const long states = get_int(c, "states", 1);
  std::mt19937_64 rng(seed(c));
  std::vector<HermitianOperator> projectors;
  if (!c.at("projectors").is_null()) {
    const json &ps = c.at("projectors");
    if (!ps.is_array() || ps.empty()) throw ConfigInvalid("projectors: expected a list");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      projectors.push_back(
          parse_operator(ps[i], n, "projectors[" + std::to_string(i) + "]"));
    }
  } else {
    const long k = c.at("cells").is_null() ? n : get_int(c, "cells", 1, n);
    projectors = random_resolution(n, static_cast<int>(k), rng);
  }
  std::vector<Proposition> cells;
  try {
    cells = partition_of(projectors);
  } catch (const NotAResolution &e) {
    throw ConfigInvalid(std::string("projectors: ") + e.what());
  }

  Outcome o;
  Csv csv(out / "partition.csv", {"state", "cell", "measure", "expect", "abs_error"});
  o.files.push_back("partition.csv");
  long layout_failures = 0;
  double measure_err = 0.0;
  std::mt19937_64 state_rng(rng());
  for (long s = 0; s < states; ++s) {
    const StateVector phi = random_state(n, state_rng);
    std::vector<ArcSet> arcs;
    ArcSet all;
    for (const Proposition &p : cells) {
      arcs.push_back(p.orbit_arc(phi));
      all = all.unite(arcs.back());
    }
    bool ok = all.is_full();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        ok = ok && arcs[i].intersect(arcs[j]).is_empty();
      }
      const double m = arcs[i].measure();
      const double p = expect(projectors[i], phi);
      measure_err = std::max(measure_err, std::abs(m - p));
      csv.row({num(static_cast<long long>(s)), num(static_cast<int>(i)), num(m), num(p),
               num(std::abs(m - p))});
    }
    layout_failures += !ok;
  }
  const BooleanMorphismReport rep = boolean_morphism_check(
      PropositionFamily::from_partition(cells), static_cast<int>(states), rng());
  const double morphism_err =
      std::max({rep.max_intersection_error, rep.max_union_error,
                rep.max_complement_error, rep.max_difference_error,
                rep.max_additivity_error});

  o.metrics = {{"cells", cells.size()},
               {"states", states},
               {"layout_failures", layout_failures},
               {"max_measure_error", measure_err},
               {"morphism_max_error", morphism_err}};
  o.criteria.push_back(at_most("arcs_disjoint_and_covering",
                               static_cast<double>(layout_failures), 0.0));
  o.criteria.push_back(at_most("cell_measure_equals_expectation", measure_err, 1e-12));
  o.criteria.push_back(at_most("boolean_morphism", morphism_err, kMorphismTol));
  return o;
}

// ---------------------------------------------------------------------------
// independence

const char *verdict_name(IndependenceVerdict v) {
  switch (v) {
    case IndependenceVerdict::kBanal:
      return "BANAL";
    case IndependenceVerdict::kNoG:
      return "NO_G";
    default:
      return "G_FITS";
  }
}

int rank_of(const HermitianOperator &p) {
  return static_cast<int>(std::lround(p.matrix().trace().real()));
}

Outcome run_independence(const json &c, const fs::path &out) {
  const int n = dim(c);
  const long trials = get_int(c, "trials", 1);
  const long fit_states = get_int(c, "fit_states", 1);
  const bool fixed = !c.at("E").is_null() || !c.at("F").is_null();
  if (fixed && (c.at("E").is_null() || c.at("F").is_null())) {
    throw ConfigInvalid("E and F must be given together");
  }

  std::mt19937_64 rng(seed(c));
  std::uniform_int_distribution<int> rank_dist(0, n);
  Outcome o;
  Csv csv(out / "independence.csv",
          {"trial", "rank_e", "rank_f", "verdict", "expected", "residual"});
  o.files.push_back("independence.csv");
  long wrong = 0;
  long banal = 0;
  double min_nog_residual = std::numeric_limits<double>::infinity();
  const long count = fixed ? 1 : trials;
  for (long k = 0; k < count; ++k) {
    HermitianOperator e = HermitianOperator::zero(n);
    HermitianOperator f = HermitianOperator::zero(n);
    if (fixed) {
      e = parse_operator(c.at("E"), n, "E");
      f = parse_operator(c.at("F"), n, "F");
      if (!e.is_projector() || !f.is_projector()) {
        throw ConfigInvalid("E and F must be projectors");
      }
    } else {
      const int re = rank_dist(rng);
      const int rf = rank_dist(rng);
      e = random_projector(n, re, rng);
      f = random_projector(n, rf, rng);
    }
    const int re = rank_of(e);
    const int rf = rank_of(f);
    const bool expect_banal = re == 0 || re == n || rf == 0 || rf == n;
    const IndependenceResult r =
        independence_scan(e, f, static_cast<int>(fit_states), rng());
    const IndependenceVerdict expected =
        expect_banal ? IndependenceVerdict::kBanal : IndependenceVerdict::kNoG;
    wrong += r.verdict != expected;
    banal += expect_banal;
    if (r.verdict == IndependenceVerdict::kNoG) {
      min_nog_residual = std::min(min_nog_residual, r.residual);
    }
    csv.row({num(static_cast<long long>(k)), num(re), num(rf), verdict_name(r.verdict),
             verdict_name(expected), num(r.residual)});
  }
  o.metrics = {{"trials", count}, {"banal", banal}, {"misclassified", wrong}};
  if (std::isfinite(min_nog_residual)) o.metrics["min_no_g_residual"] = min_nog_residual;
  o.criteria.push_back(at_most("no_misclassification", static_cast<double>(wrong), 0.0));
  return o;
}

// ---------------------------------------------------------------------------
// frame

Outcome run_frame(const json &c, const fs::path &out) {
  const int n = dim(c);
  if (n < 3) throw ConfigInvalid("frame: n must be at least 3");
  const long bases = get_int(c, "bases", 2);
  const Context nu = parse_context(c.at("context"));
  std::mt19937_64 rng(seed(c));
  const StateVector phi0 =
      c.at("state").is_null() ? random_state(n, rng) : parse_state(c.at("state"), n);

  Outcome o;
  Csv csv(out / "frame.csv",
          {"pair", "chosen_a", "chosen_b", "shared_value_a", "shared_value_b"});
  o.files.push_back("frame.csv");
  bool weights_exact = true;
  long disagreements = 0;
  std::optional<long> first_pair;
  const long pairs = (bases + 1) / 2;
  for (long k = 0; k < pairs; ++k) {
    // Basis b shares the first vector of basis a and lists it last.
    const ComplexMatrix u = random_unitary(n, rng);
    const ComplexMatrix rest = u.rightCols(n - 1) * random_unitary(n - 1, rng);
    Basis a;
    Basis b;
    for (int i = 0; i < n; ++i) a.push_back(u.col(i));
    for (int i = 0; i < n - 1; ++i) b.push_back(rest.col(i));
    b.push_back(u.col(0));
    const FrameFunctionReport rep = frame_function_demo(phi0, {a, b}, {}, nu);
    weights_exact = weights_exact && rep.weights_exact;
    const bool va = rep.chosen[0] == 0;
    const bool vb = rep.chosen[1] == n - 1;
    if (va != vb) {
      ++disagreements;
      if (!first_pair) first_pair = k;
    }
    csv.row({num(static_cast<long long>(k)), num(rep.chosen[0]), num(rep.chosen[1]),
             flag(va), flag(vb)});
  }
  o.metrics = {{"bases", 2 * pairs},
               {"weights_exact", weights_exact},
               {"disagreements", disagreements}};
  if (first_pair) o.metrics["first_disagreement_pair"] = *first_pair;
  o.criteria.push_back({"frame_weight_exactly_one", weights_exact,
                        weights_exact ? 1.0 : 0.0, 1.0, ""});
  o.criteria.push_back(at_least("shared_vector_disagreement",
                                static_cast<double>(disagreements), 1.0));
  return o;
}

// ---------------------------------------------------------------------------
// factorize

std::function<double(double)> parse_map(const json &j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "identity") return [](double x) { return x; };
    if (s == "square") return [](double x) { return x * x; };
    if (s == "abs") return [](double x) { return std::abs(x); };
    if (s == "negate") return [](double x) { return -x; };
    throw ConfigInvalid("map: unknown name \"" + s + "\"");
  }
  check_keys(j, {"table", "indicator"}, "map");
  if (j.contains("indicator")) {
    const BorelSet b = parse_borel(j.at("indicator"), "map.indicator");
    return [b](double x) { return b.contains(x) ? 1.0 : 0.0; };
  }
  if (j.contains("table")) {
    std::vector<std::pair<double, double>> table;
    for (const json &e : j.at("table")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ConfigInvalid("map.table: expected [x, y] pairs");
      }
      table.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return [table](double x) {
      for (const auto &[from, to] : table) {
        if (std::abs(from - x) <= 1e-9) return to;
      }
      throw ConfigInvalid("map.table: no entry for eigenvalue " + num(x));
    };
  }
  throw ConfigInvalid("map: expected a name or an object");
}

Outcome run_factorize(const json &c, const fs::path &out) {
  const int n = dim(c);
  const HermitianOperator t = parse_operator(c.at("operator"), n);
  const std::function<double(double)> b = parse_map(c.at("map"));
  const long samples = get_int(c, "samples", 0);
  const bool expect_nested = get_bool(c, "expect_nested");
  const bool derived = c.at("g").is_null();

  const HiddenObservable f(t);
  const HiddenObservable g =
      derived ? f.compose(b) : HiddenObservable(parse_operator(c.at("g"), n, "g"));
  const Factorization r = factorize(g, f, static_cast<int>(samples), seed(c));

  Outcome o;
  Csv csv(out / "factorize.csv", {"eigenvalue_f", "value_g"});
  o.files.push_back("factorize.csv");
  double map_err = 0.0;
  for (const auto &[x, y] : r.map) {
    csv.row({num(x), num(y)});
    map_err = std::max(map_err, std::abs(y - b(x)));
  }
  o.metrics = {{"nested", r.nested},
               {"pointwise_checked", r.pointwise_checked},
               {"pointwise_agree", r.pointwise_agree}};
  if (r.separator) o.metrics["separator_rank"] = rank_of(*r.separator);
  o.criteria.push_back({"nesting_matches_expectation", r.nested == expect_nested,
                        r.nested ? 1.0 : 0.0, expect_nested ? 1.0 : 0.0,
                        r.nested ? "nested" : "not nested"});
  if (r.nested && derived) {
    o.metrics["max_map_error"] = map_err;
    o.criteria.push_back(at_most("map_recovers_b", map_err, 1e-12));
    o.criteria.push_back(at_most(
        "pointwise_g_equals_b_of_f",
        static_cast<double>(r.pointwise_checked - r.pointwise_agree), 0.0,
        std::to_string(r.pointwise_agree) + "/" + std::to_string(r.pointwise_checked)));
  }
  return o;
}

// ---------------------------------------------------------------------------
// registry

std::vector<ExperimentKind> make_kinds() {
  const json sigma_x_speed = {
      {"constant", 0.0},
      {"terms", json::array({{{"coef", 1.0}, {"operator", "sigma_x"}, {"power", 1}}})}};
  return {
      {"born", "Born rule: exact arc probability and Monte Carlo over hidden phases",
       {{"n", 2}, {"operator", "sigma_z"}, {"state", {{"amplitudes", {1, 1}}}},
        {"set", {{"points", {1}}}}, {"context", nullptr}, {"samples", 100000},
        {"runs", 1}, {"min_pass_fraction", 0.98}},
       run_born},
      {"dynamics", "Hamiltonian flow: RK4 field integration vs closed form",
       {{"n", 2}, {"operator", "sigma_z"}, {"phase_speed", sigma_x_speed},
        {"state", {{"amplitudes", {json::array({0.6, 0.0}), json::array({0.0, 0.8})}}}},
        {"t_max", 1.0}, {"step", 1e-3}, {"quad_tol", 1e-9},
        {"tol_deviation", 1e-6}, {"tol_energy", 1e-8}, {"projective_grid", 11}},
       run_dynamics},
      {"uncertainty", "Jordan/Poisson identities, dispersion forms, Heisenberg bound",
       {{"n", 2}, {"A", nullptr}, {"B", nullptr}, {"samples", 1000}},
       run_uncertainty},
      {"context", "Contextuality: truth values of one projector under two contexts",
       {{"n", 2}, {"projector", {{"diag", {1, 0}}}},
        {"contexts", json::array({nullptr, {{"rigid", {{"offset", kPi}}}}})},
        {"state", nullptr}, {"budget", 1024}, {"expect_witness", true}},
       run_context},
      {"partition", "Stacked-arc partitions from resolutions of the identity",
       {{"n", 3}, {"projectors", nullptr}, {"cells", nullptr}, {"states", 100}},
       run_partition},
      {"independence", "Total independence scan: only banal pairs admit a product G",
       {{"n", 2}, {"E", nullptr}, {"F", nullptr}, {"trials", 1000}, {"fit_states", 32}},
       run_independence},
      {"frame", "Frame functions: weight one per basis, shared-vector disagreement",
       {{"n", 3}, {"bases", 1000}, {"state", nullptr}, {"context", nullptr}},
       run_frame},
      {"factorize", "Factorization g = b o f through spectral projectors",
       {{"n", 2}, {"operator", "sigma_z"}, {"map", "square"}, {"g", nullptr},
        {"samples", 10000}, {"expect_nested", true}},
       run_factorize},
  };
}

const ExperimentKind &find_kind(const std::string &name) {
  for (const ExperimentKind &k : experiment_kinds()) {
    if (k.name == name) return k;
  }
  throw ConfigInvalid("kind: unknown experiment kind \"" + name + "\"");
}

json common_defaults(const ExperimentKind &k) {
  return {{"schema", kSchema}, {"kind", k.name}, {"id", k.name}, {"seed", 0}};
}

void write_report(const fs::path &out, const json &config, const Outcome &o,
                  bool pass) {
  json criteria = json::array();
  for (const Criterion &c : o.criteria) {
    criteria.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"value", c.value},
                        {"threshold", c.threshold},
                        {"detail", c.detail}});
  }
  const json report = {{"schema", kSchema}, {"config", config},
                       {"metrics", o.metrics}, {"criteria", criteria},
                       {"files", o.files},     {"pass", pass}};
  std::ofstream f(out / "report.json", std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigInvalid("cannot write " + (out / "report.json").string());
  f << report.dump(2) << '\n';
}

}  // namespace

const std::vector<ExperimentKind> &experiment_kinds() {
  static const std::vector<ExperimentKind> kinds = make_kinds();
  return kinds;
}

json resolve_config(const json &raw) {
  if (!raw.is_object()) throw ConfigInvalid("config must be a JSON object");
  if (!raw.contains("schema")) throw ConfigInvalid("missing required key \"schema\"");
  if (raw.at("schema") != kSchema) {
    throw ConfigInvalid("schema: expected \"" + std::string(kSchema) + "\", got " +
                        raw.at("schema").dump());
  }
  if (!raw.contains("kind")) throw ConfigInvalid("missing required key \"kind\"");
  if (!raw.at("kind").is_string()) throw ConfigInvalid("kind: expected a string");
  const ExperimentKind &kind = find_kind(raw.at("kind").get<std::string>());

  json resolved = common_defaults(kind);
  resolved.update(kind.defaults);
  for (const auto &item : raw.items()) {
    if (!resolved.contains(item.key())) {
      throw ConfigInvalid("unknown key \"" + item.key() + "\" for kind " + kind.name);
    }
    resolved[item.key()] = item.value();
  }
  if (!resolved.at("id").is_string()) throw ConfigInvalid("id: expected a string");
  get_int(resolved, "seed", 0);
  dim(resolved);
  return resolved;
}

void apply_override(json &config, const std::string &assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigInvalid("--set expects key=value, got \"" + assignment + "\"");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  json *node = &config;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (part.empty()) throw ConfigInvalid("--set: empty path segment in " + key);
    if (!node->is_object()) throw ConfigInvalid("--set: " + key + " is not an object path");
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    node = &(*node)[part];
    if (node->is_null()) *node = json::object();
    start = dot + 1;
  }
}

int run_config(json raw, const fs::path &out, std::ostream &log, std::ostream &err) {
  json config;
  Outcome o;
  try {
    config = resolve_config(raw);
    fs::create_directories(out);
    o = find_kind(config.at("kind").get<std::string>()).run(config, out);
  } catch (const ConfigInvalid &e) {
    err << "hv: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception &e) {
    err << "hv: error: " << e.what() << '\n';
    return kExitConfig;
  }

  bool pass = true;
  for (const Criterion &c : o.criteria) {
    pass = pass && c.pass;
    log << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << num(c.value)
        << " threshold=" << num(c.threshold);
    if (!c.detail.empty()) log << " (" << c.detail << ")";
    log << '\n';
  }
  try {
    write_report(out, config, o, pass);
  } catch (const std::exception &e) {
    err << "hv: error: " << e.what() << '\n';
    return kExitConfig;
  }
  return pass ? kExitPass : kExitCriterion;
}

int run(const fs::path &config_path, const fs::path &out,
        std::optional<std::uint64_t> seed_override,
        const std::vector<std::string> &overrides, std::ostream &log,
        std::ostream &err) {
  json raw;
  try {
    std::ifstream in(config_path);
    if (!in) throw ConfigInvalid("cannot read " + config_path.string());
    raw = json::parse(in, nullptr, true, true);
    if (raw.is_object()) {
      for (const std::string &s : overrides) apply_override(raw, s);
      if (seed_override) raw["seed"] = *seed_override;
    }
  } catch (const json::parse_error &e) {
    err << "hv: config error: " << config_path.string() << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigInvalid &e) {
    err << "hv: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run_config(std::move(raw), out, log, err);
}

json list_json() {
  json kinds = json::array();
  for (const ExperimentKind &k : experiment_kinds()) {
    json keys = common_defaults(k);
    keys.update(k.defaults);
    kinds.push_back({{"kind", k.name},
                     {"description", k.description},
                     {"required", {"schema", "kind"}},
                     {"defaults", keys}});
  }
  return {{"schema", kSchema}, {"kinds", kinds}};
}

std::string list_table() {
  std::ostringstream os;
  os << "schema: " << kSchema << "  (required keys: schema, kind)\n\n";
  for (const ExperimentKind &k : experiment_kinds()) {
    os << k.name << std::string(k.name.size() < 14 ? 14 - k.name.size() : 1, ' ')
       << k.description << "\n" << std::string(14, ' ') << "keys: id, seed";
    for (const auto &item : k.defaults.items()) os << ", " << item.key();
    os << "\n";
  }
  return os.str();
}

}  // namespace hv::cli

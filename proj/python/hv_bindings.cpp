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

// Python bindings for the core operations. Matrices and vectors cross the
// boundary as numpy arrays; seeds replace generator objects.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <random>
#include <sstream>

#include "experiments.hpp"
#include "hv/dynamics.hpp"
#include "hv/errors.hpp"
#include "hv/geometry.hpp"
#include "hv/logic.hpp"
#include "hv/measure.hpp"

namespace py = pybind11;
using namespace hv;

namespace {

const char *verdict_name(IndependenceVerdict v) {
  switch (v) {
    case IndependenceVerdict::kBanal: return "banal";
    case IndependenceVerdict::kNoG: return "no_g";
    case IndependenceVerdict::kGFits: return "g_fits";
  }
  return "?";
}

PhaseSpeed phase_speed(double constant,
                       const std::vector<std::tuple<double, HermitianOperator, int>> &terms) {
  PhaseSpeed h = PhaseSpeed::constant(constant);
  for (const auto &[coef, op, power] : terms) {
    h = h.plus(PhaseSpeed::expectation(op, coef, power));
  }
  return h;
}

}  // namespace

PYBIND11_MODULE(_hv, m) {
  m.doc() = "Hidden-variable quantum mechanics on the state sphere.";

  auto base = py::register_exception<Error>(m, "HVError", PyExc_RuntimeError);
  py::register_exception<ConfigInvalid>(m, "ConfigInvalid", base.ptr());
  py::register_exception<NotHermitian>(m, "NotHermitian", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<NotOrthogonal>(m, "NotOrthogonal", base.ptr());
  py::register_exception<StepTooLarge>(m, "StepTooLarge", base.ptr());

  m.attr("PI") = kPi;

  py::class_<HermitianOperator>(m, "HermitianOperator")
      .def(py::init<const ComplexMatrix &>(), py::arg("matrix"))
      .def_static("identity", &HermitianOperator::identity)
      .def_static("zero", &HermitianOperator::zero)
      .def_static("diag", &HermitianOperator::diag)
      .def_static("pauli_x", &HermitianOperator::pauli_x)
      .def_static("pauli_y", &HermitianOperator::pauli_y)
      .def_static("pauli_z", &HermitianOperator::pauli_z)
      .def_static("ray_projector", &HermitianOperator::ray_projector)
      .def_property_readonly("dim", &HermitianOperator::dim)
      .def_property_readonly("matrix", &HermitianOperator::matrix)
      .def("is_projector", &HermitianOperator::is_projector, py::arg("tol") = 1e-9)
      .def("eigenvalues", [](const HermitianOperator &a) {
        return spectral_decompose(a).eigenvalues();
      });

  py::class_<StateVector>(m, "StateVector")
      .def_static("from_complex", &StateVector::from_complex, py::arg("z"))
      .def_static("basis", &StateVector::basis, py::arg("n"), py::arg("k"))
      .def_property_readonly("coords", &StateVector::coords)
      .def_property_readonly("complex_dim", &StateVector::complex_dim)
      .def("as_complex", &StateVector::as_complex);

  m.def("rotate", &rotate, py::arg("phi"), py::arg("theta"));
  m.def("same_ray", [](const StateVector &a, const StateVector &b) { return same_ray(a, b); });
  m.def("random_state", [](int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_state(n, rng);
  }, py::arg("n"), py::arg("seed"));
  m.def("random_hermitian", [](int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_hermitian(n, rng);
  }, py::arg("n"), py::arg("seed"));
  m.def("random_projector", [](int n, int rank, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_projector(n, rank, rng);
  }, py::arg("n"), py::arg("rank"), py::arg("seed"));
  m.def("expect", py::overload_cast<const HermitianOperator &, const StateVector &>(&expect),
        py::arg("a"), py::arg("phi"));

  py::class_<BorelSet>(m, "BorelSet")
      .def_static("all", &BorelSet::all)
      .def_static("empty", &BorelSet::empty)
      .def_static("point", &BorelSet::point)
      .def_static("points", &BorelSet::points)
      .def_static("at_most", &BorelSet::at_most)
      .def_static("closed", &BorelSet::closed)
      .def_static("half_open", &BorelSet::half_open)
      .def("contains", &BorelSet::contains)
      .def("unite", &BorelSet::unite);

  py::class_<Context>(m, "Context")
      .def(py::init<>())
      .def_static("identity", &Context::identity)
      .def_static("rigid", py::overload_cast<double>(&Context::rigid), py::arg("offset"))
      .def_static("exchange", py::overload_cast<std::vector<int>>(&Context::exchange),
                  py::arg("perm"))
      .def("then", &Context::then);

  py::class_<Proposition>(m, "Proposition")
      .def_property_readonly("projector", &Proposition::projector)
      .def("orbit_measure", &Proposition::orbit_measure)
      .def("orbit_arc", [](const Proposition &l, const StateVector &phi) {
        std::vector<std::pair<double, double>> out;
        const ArcSet arc = l.orbit_arc(phi);
        for (const ArcSet::Piece &p : arc.pieces()) out.emplace_back(p.lo, p.hi);
        return out;
      });
  m.def("proposition_of", [](const HermitianOperator &e, const Context &nu) {
    return proposition_of(e, {}, nu);
  }, py::arg("e"), py::arg("context") = Context{});
  m.def("member", &member);
  m.def("apply_context", &apply_context);
  m.def("complement", &complement);
  m.def("partition_of", [](const std::vector<HermitianOperator> &ps, const Context &nu) {
    return partition_of(ps, {}, nu);
  }, py::arg("projectors"), py::arg("context") = Context{});
  m.def("product_pair", [](const HermitianOperator &e, const HermitianOperator &f) {
    return product_pair(e, f);
  });

  py::class_<HiddenObservable>(m, "HiddenObservable")
      .def(py::init([](const HermitianOperator &t, const Context &nu) {
             return HiddenObservable(t, {}, nu);
           }),
           py::arg("t"), py::arg("context") = Context{})
      .def_property_readonly("values", &HiddenObservable::values)
      .def("op", &HiddenObservable::op)
      .def("compose", &HiddenObservable::compose)
      .def("with_context", &HiddenObservable::with_context);
  m.def("hidden_value", &hidden_value);
  m.def("essential_image", &essential_image);
  m.def("preimage_proposition", &preimage_proposition);

  m.def("born_exact", &born_exact, py::arg("phi"), py::arg("f"), py::arg("b"));
  m.def("born_monte_carlo",
        [](const StateVector &phi, const HiddenObservable &f, const BorelSet &b,
           std::int64_t samples, std::uint64_t seed, int threads) {
          const MonteCarloEstimate e =
              born_monte_carlo(Ray(phi), f, b, samples, PhaseSampler(seed), threads);
          return py::make_tuple(e.frequency, e.stderr_, e.hits);
        },
        py::arg("phi"), py::arg("f"), py::arg("b"), py::arg("samples"), py::arg("seed"),
        py::arg("threads") = 0);
  m.def("mean_value", [](const HiddenObservable &f, const StateVector &phi) {
    return mean_value(f, Ray(phi));
  });
  m.def("form_fit",
        [](const StateVector &phi, const StateVector &psi,
           const std::function<double(double)> &g, int samples) {
          const FormFit fit = form_fit(phi, psi, g, samples);
          return py::make_tuple(fit.a, fit.b, fit.c, fit.residual);
        },
        py::arg("phi"), py::arg("psi"), py::arg("g"), py::arg("samples") = kFormFitSamples);

  m.def("jordan", [](const HermitianOperator &a, const HermitianOperator &b,
                     const StateVector &phi) {
    return jordan(KaehlerFunction(a), KaehlerFunction(b), phi);
  });
  m.def("poisson", [](const HermitianOperator &a, const HermitianOperator &b,
                      const StateVector &phi) {
    return poisson(KaehlerFunction(a), KaehlerFunction(b), phi);
  });
  m.def("dispersion", [](const HermitianOperator &a, const StateVector &phi) {
    return dispersion(KaehlerFunction(a), phi);
  });
  m.def("heisenberg_check", [](const HermitianOperator &a, const HermitianOperator &b,
                               const StateVector &phi) {
    const HeisenbergCheck c = heisenberg_check(KaehlerFunction(a), KaehlerFunction(b), phi);
    py::dict d;
    d["lhs"] = c.lhs;
    d["rhs_strong"] = c.rhs_strong;
    d["rhs_weak"] = c.rhs_weak;
    d["pass"] = c.pass;
    return d;
  });

  m.def("unitary_evolve",
        py::overload_cast<const HermitianOperator &, double, const StateVector &>(&unitary_evolve),
        py::arg("a"), py::arg("t"), py::arg("phi"));
  m.def("hamiltonian_flow",
        [](const HermitianOperator &a, double t, const StateVector &phi, double constant,
           const std::vector<std::tuple<double, HermitianOperator, int>> &terms,
           double quad_tol) {
          return hamiltonian_flow(HamiltonianSystem(a, phase_speed(constant, terms)), t, phi,
                                  quad_tol);
        },
        py::arg("a"), py::arg("t"), py::arg("phi"), py::arg("h_constant") = 0.0,
        py::arg("h_terms") = std::vector<std::tuple<double, HermitianOperator, int>>{},
        py::arg("quad_tol") = kDefaultQuadTol);

  m.def("independence_scan",
        [](const HermitianOperator &e, const HermitianOperator &f, int trials,
           std::uint64_t seed) {
          const IndependenceResult r = independence_scan(e, f, trials, seed);
          return py::make_tuple(verdict_name(r.verdict), r.residual);
        },
        py::arg("e"), py::arg("f"), py::arg("trials") = 100, py::arg("seed") = 0);
  m.def("compatible", [](const Proposition &l, const Proposition &mm) {
    const Compatibility c = compatible(l, mm);
    py::dict d;
    d["compatible"] = c.compatible;
    d["commutator"] = c.commutator;
    if (c.witness) d["witness_residual"] = c.witness->fit.residual;
    return d;
  });
  m.def("factorize", [](const HiddenObservable &g, const HiddenObservable &f) {
    const Factorization r = factorize(g, f);
    py::dict d;
    d["nested"] = r.nested;
    d["map"] = r.map;
    d["pointwise_checked"] = r.pointwise_checked;
    d["pointwise_agree"] = r.pointwise_agree;
    return d;
  });

  m.def("run_experiment",
        [](const std::string &config_json, const std::filesystem::path &out) {
          std::ostringstream log;
          std::ostringstream err;
          cli::json raw;
          try {
            raw = cli::json::parse(config_json);
          } catch (const cli::json::exception &e) {
            throw ConfigInvalid(e.what());
          }
          const int code = cli::run_config(raw, out, log, err);
          return py::make_tuple(code, log.str(), err.str());
        },
        py::arg("config_json"), py::arg("out"),
        "Runs one experiment; returns (exit_code, log, errors).");
  m.def("list_experiments", [] { return cli::list_json().dump(); },
        "JSON listing of experiment kinds.");
}

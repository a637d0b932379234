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

#include "hv/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hv {

// ---------------------------------------------------------------------------
// PhaseSpeed / HamiltonianSystem

PhaseSpeed PhaseSpeed::constant(double c) {
  PhaseSpeed h;
  h.constant_ = c;
  return h;
}

PhaseSpeed PhaseSpeed::expectation(const HermitianOperator &a, double coef,
                                   int power) {
  if (power < 0) throw std::invalid_argument("phase speed power must be >= 0");
  PhaseSpeed h;
  h.terms_.push_back({coef, a, power});
  return h;
}

PhaseSpeed PhaseSpeed::plus(const PhaseSpeed &o) const {
  PhaseSpeed h = *this;
  h.constant_ += o.constant_;
  h.terms_.insert(h.terms_.end(), o.terms_.begin(), o.terms_.end());
  return h;
}

double PhaseSpeed::operator()(const StateVector &phi) const {
  double value = constant_;
  for (const Term &t : terms_) {
    value += t.coef * std::pow(expect(t.op, phi), t.power);
  }
  return value;
}

HamiltonianSystem::HamiltonianSystem(HermitianOperator a, PhaseSpeed h)
    : a_(std::move(a)), spectrum_(spectral_decompose(a_)), h_(std::move(h)) {
  for (const auto &t : h_.terms()) {
    if (t.op.dim() != a_.dim()) {
      throw DimensionMismatch("phase speed operator dimension");
    }
  }
}

// ---------------------------------------------------------------------------
// Closed-form flow

ComplexMatrix unitary_matrix(const SpectralDecomposition &d, double t) {
  ComplexMatrix u = ComplexMatrix::Zero(d.dim(), d.dim());
  for (std::size_t i = 0; i < d.size(); ++i) {
    u += std::polar(1.0, -t * d.eigenvalues()[i]) * d.projectors()[i];
  }
  return u;
}

StateVector unitary_evolve(const SpectralDecomposition &d, double t,
                           const StateVector &phi) {
  if (phi.complex_dim() != d.dim()) throw DimensionMismatch("unitary_evolve");
  if (t == 0.0) return phi;
  const ComplexVector z = phi.as_complex();
  ComplexVector out = ComplexVector::Zero(z.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += std::polar(1.0, -t * d.eigenvalues()[i]) * (d.projectors()[i] * z);
  }
  return StateVector::from_complex(out);
}

StateVector unitary_evolve(const HermitianOperator &a, double t,
                           const StateVector &phi) {
  return unitary_evolve(spectral_decompose(a), t, phi);
}

namespace {

struct SimpsonBudget {
  long evaluations = 0;
  long max_evaluations = 2'000'000;
};

double adaptive_simpson(const std::function<double(double)> &f, double a,
                        double b, double fa, double fm, double fb,
                        double whole, double tol, int depth,
                        SimpsonBudget &budget) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  budget.evaluations += 2;
  if (budget.evaluations > budget.max_evaluations || depth > 60) {
    throw QuadratureFailure("adaptive Simpson exceeded its refinement budget");
  }
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= 3 && std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1,
                          budget) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1,
                          budget);
}

double integrate(const std::function<double(double)> &f, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  SimpsonBudget budget;
  const double fa = f(a);
  const double fm = f(0.5 * (a + b));
  const double fb = f(b);
  budget.evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 0, budget);
}

/// int_a^b h(e^{-irA} phi) dr.
double phase_integral_between(const HamiltonianSystem &sys, double a, double b,
                              const StateVector &phi, double quad_tol) {
  const PhaseSpeed &h = sys.phase_speed();
  if (h.is_constant()) return h.constant_part() * (b - a);
  auto integrand = [&](double r) {
    return h(unitary_evolve(sys.spectrum(), r, phi));
  };
  return integrate(integrand, a, b, quad_tol);
}

}  // namespace

double phase_integral(const HamiltonianSystem &sys, double t,
                      const StateVector &phi, double quad_tol) {
  return phase_integral_between(sys, 0.0, t, phi, quad_tol);
}

StateVector hamiltonian_flow(const HamiltonianSystem &sys, double t,
                             const StateVector &phi, double quad_tol) {
  const double phase = phase_integral(sys, t, phi, quad_tol);
  return rotate(unitary_evolve(sys.spectrum(), t, phi), -phase);
}

// ---------------------------------------------------------------------------
// Vector field and integrator

namespace {

/// The field at an arbitrary nonzero vector; h is read at the radial
/// projection onto the sphere.
RealVector field_at(const HamiltonianSystem &sys, const RealVector &v) {
  const double h = sys.phase_speed()(StateVector::normalized(v));
  return -apply_j(sys.generator().apply(v)) - h * apply_j(v);
}

}  // namespace

RealVector vector_field(const HamiltonianSystem &sys, const StateVector &phi) {
  return field_at(sys, phi.coords());
}

RealVector vector_field_from_gradient(const HamiltonianSystem &sys,
                                      const StateVector &phi) {
  const RealVector grad = grad_expect(sys.generator(), phi);
  const double l = expect(sys.generator(), phi);
  const double h = sys.phase_speed()(phi);
  return -apply_j(grad) - (l + h) * apply_j(phi.coords());
}

FlowResult closed_form_trajectory(const HamiltonianSystem &sys,
                                  const std::vector<double> &times,
                                  const StateVector &phi, double quad_tol) {
  FlowResult out;
  out.method = "closed-form";
  const double e0 = expect(sys.generator(), phi);
  for (double t : times) {
    out.times.push_back(t);
    out.states.push_back(hamiltonian_flow(sys, t, phi, quad_tol));
    out.max_energy_drift = std::max(
        out.max_energy_drift,
        std::abs(expect(sys.generator(), out.states.back()) - e0));
  }
  return out;
}

FlowResult integrate_field(const HamiltonianSystem &sys, double t,
                           const StateVector &phi, double step,
                           double quad_tol) {
  if (!(step > 0.0)) throw std::invalid_argument("integrate_field: step > 0");
  FlowResult out;
  out.method = "rk4";
  out.times.push_back(0.0);
  out.states.push_back(phi);
  if (t == 0.0) return out;

  const long steps = std::max(1L, static_cast<long>(std::ceil(std::abs(t) / step)));
  const double dt = t / static_cast<double>(steps);
  const double e0 = expect(sys.generator(), phi);

  RealVector v = phi.coords();
  double phase = 0.0;
  for (long j = 1; j <= steps; ++j) {
    const RealVector k1 = field_at(sys, v);
    const RealVector k2 = field_at(sys, v + 0.5 * dt * k1);
    const RealVector k3 = field_at(sys, v + 0.5 * dt * k2);
    const RealVector k4 = field_at(sys, v + dt * k3);
    v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const StateVector state = StateVector::normalized(v);
    v = state.coords();

    const double tj = dt * static_cast<double>(j);
    const double drift = std::abs(expect(sys.generator(), state) - e0);
    out.max_energy_drift = std::max(out.max_energy_drift, drift);
    if (drift > kMaxEnergyDrift) {
      throw StepTooLarge("energy drift " + std::to_string(drift) + " at t = " +
                         std::to_string(tj));
    }

    phase += phase_integral_between(sys, tj - dt, tj, phi, quad_tol);
    const StateVector exact =
        rotate(unitary_evolve(sys.spectrum(), tj, phi), -phase);
    out.max_deviation = std::max(
        out.max_deviation, (state.coords() - exact.coords()).cwiseAbs().maxCoeff());

    out.times.push_back(tj);
    out.states.push_back(state);
  }
  return out;
}

ProjectiveComparison projective_compare(const HamiltonianSystem &a,
                                        const HamiltonianSystem &b,
                                        const std::vector<double> &times,
                                        const StateVector &phi,
                                        double quad_tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("projective_compare");
  ProjectiveComparison out{0.0, times.empty() ? 0.0 : times.front()};
  for (double t : times) {
    const double d = ray_distance(hamiltonian_flow(a, t, phi, quad_tol),
                                  hamiltonian_flow(b, t, phi, quad_tol));
    if (d > out.max_ray_distance) out = {d, t};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries

Eigen::MatrixXd realify(const ComplexMatrix &m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = -m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = m.real();
  return r;
}

Eigen::MatrixXd conjugation(int n) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  c.bottomRightCorner(n, n) *= -1.0;
  return c;
}

int symmetry_sign(const Eigen::MatrixXd &u) {
  constexpr double tol = 1e-9;
  if (u.rows() != u.cols() || u.rows() % 2 != 0) {
    throw DimensionMismatch("symmetry_sign needs a square 2n x 2n map");
  }
  const Eigen::Index dim = u.rows();
  const double orth =
      (u.transpose() * u - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (orth > tol) {
    throw NotComplexOrConjugateLinear("map is not orthogonal");
  }
  const Eigen::MatrixXd j = realify(Complex(0, 1) *
                                    ComplexMatrix::Identity(dim / 2, dim / 2));
  if ((u * j - j * u).cwiseAbs().maxCoeff() <= tol) return 1;
  if ((u * j + j * u).cwiseAbs().maxCoeff() <= tol) return -1;
  throw NotComplexOrConjugateLinear("map neither commutes nor anticommutes with J");
}

StateVector AutomorphismDecomposition::apply_internal(
    const StateVector &phi) const {
  const StateVector canonical = pivot_section(phi);
  const double u = arg_rel(phi, canonical);
  return rotate(canonical, internal.forward(u, canonical));
}

StateVector AutomorphismDecomposition::apply(const StateVector &phi) const {
  return StateVector::from_complex(unitary * apply_internal(phi).as_complex());
}

AutomorphismDecomposition decompose_automorphism(
    const ComplexMatrix &u, const std::function<double(const StateVector &)> &h,
    const std::vector<StateVector> &probes) {
  const Eigen::Index n = u.rows();
  if (u.cols() != n ||
      (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() >
          1e-9) {
    throw DimensionMismatch("decompose_automorphism needs a unitary matrix");
  }
  static constexpr double kProbeAngles[] = {0.3, 1.1, 2.5, -2.0, kPi};
  for (const StateVector &phi : probes) {
    const double h0 = h(phi);
    for (double theta : kProbeAngles) {
      const double drift = std::abs(h(rotate(phi, theta)) - h0);
      if (drift > 1e-10) {
        throw PhaseNotOrbitConstant("h changes by " + std::to_string(drift) +
                                    " along an orbit");
      }
    }
  }

  AutomorphismDecomposition out{
      u, Context::rigid("internal(-h)",
                        [h](const StateVector &canonical) { return -h(canonical); })};

  for (const StateVector &phi : probes) {
    const StateVector direct =
        StateVector::from_complex(u * rotate(phi, -h(phi)).as_complex());
    const double err = (out.apply(phi).coords() - direct.coords()).cwiseAbs().maxCoeff();
    if (err > 1e-10) {
      throw std::logic_error("automorphism recomposition off by " +
                             std::to_string(err));
    }
  }
  return out;
}

}  // namespace hv

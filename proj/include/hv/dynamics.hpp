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

#ifndef HV_DYNAMICS_HPP
#define HV_DYNAMICS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hv/context.hpp"
#include "hv/operators.hpp"

namespace hv {

/// The phase speed h of a Hamiltonian system, a polynomial in expectation
/// values: h(phi) = constant + sum_k coef_k <A_k>_phi^power_k. Expectation
/// values are constant on orbits, so every h built here is too.
class PhaseSpeed {
 public:
  struct Term {
    double coef;
    HermitianOperator op;
    int power;
  };

  PhaseSpeed() = default;
  static PhaseSpeed constant(double c);
  static PhaseSpeed expectation(const HermitianOperator &a, double coef = 1.0,
                                int power = 1);

  PhaseSpeed plus(const PhaseSpeed &o) const;

  double operator()(const StateVector &phi) const;
  bool is_constant() const { return terms_.empty(); }
  double constant_part() const { return constant_; }
  const std::vector<Term> &terms() const { return terms_; }

 private:
  double constant_ = 0.0;
  std::vector<Term> terms_;
};

/// A generator A together with a phase speed h.
class HamiltonianSystem {
 public:
  HamiltonianSystem(HermitianOperator a, PhaseSpeed h);

  const HermitianOperator &generator() const { return a_; }
  const SpectralDecomposition &spectrum() const { return spectrum_; }
  const PhaseSpeed &phase_speed() const { return h_; }
  int dim() const { return a_.dim(); }

 private:
  HermitianOperator a_;
  SpectralDecomposition spectrum_;
  PhaseSpeed h_;
};

/// e^{-itA} phi through the spectral decomposition.
StateVector unitary_evolve(const HermitianOperator &a, double t,
                           const StateVector &phi);
StateVector unitary_evolve(const SpectralDecomposition &d, double t,
                           const StateVector &phi);
/// The matrix e^{-itA}.
ComplexMatrix unitary_matrix(const SpectralDecomposition &d, double t);

inline constexpr double kDefaultQuadTol = 1e-9;

/// int_0^t h(e^{-irA} phi) dr by adaptive Simpson. Throws QuadratureFailure
/// when the refinement budget runs out.
double phase_integral(const HamiltonianSystem &sys, double t,
                      const StateVector &phi, double quad_tol = kDefaultQuadTol);

/// e^{-i int_0^t h(e^{-irA} phi) dr} e^{-itA} phi.
StateVector hamiltonian_flow(const HamiltonianSystem &sys, double t,
                             const StateVector &phi,
                             double quad_tol = kDefaultQuadTol);

/// X|_phi = -J(A phi) - h(phi) J phi.
RealVector vector_field(const HamiltonianSystem &sys, const StateVector &phi);
/// The same field from the gradient:
/// -J Grad<A> - (<A>_phi + h(phi)) J phi.
RealVector vector_field_from_gradient(const HamiltonianSystem &sys,
                                      const StateVector &phi);

struct FlowResult {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::string method;
  /// Sup-norm distance to the closed-form flow over the samples (integrated
  /// runs only; zero for closed form).
  double max_deviation = 0.0;
  /// Largest |<A>_{phi_j} - <A>_{phi_0}| along the run.
  double max_energy_drift = 0.0;
};

/// Samples of the closed-form flow on a time grid.
FlowResult closed_form_trajectory(const HamiltonianSystem &sys,
                                  const std::vector<double> &times,
                                  const StateVector &phi,
                                  double quad_tol = kDefaultQuadTol);

/// Energy drift above this raises StepTooLarge.
inline constexpr double kMaxEnergyDrift = 1e-3;

/// Classical fourth-order Runge-Kutta on psi' = X(psi), renormalized onto the
/// sphere after every step. The number of steps is ceil(|t| / step); every
/// step is recorded and compared with the closed-form flow.
FlowResult integrate_field(const HamiltonianSystem &sys, double t,
                           const StateVector &phi, double step,
                           double quad_tol = kDefaultQuadTol);

struct ProjectiveComparison {
  double max_ray_distance;
  /// Grid time where the maximum is attained.
  double witness_time;
};

/// max over the grid of 1 - |<<phi_t^A, phi_t^B>>| / 2.
ProjectiveComparison projective_compare(const HamiltonianSystem &a,
                                        const HamiltonianSystem &b,
                                        const std::vector<double> &times,
                                        const StateVector &phi,
                                        double quad_tol = kDefaultQuadTol);

/// +1 when the orthogonal map u commutes with J, -1 when it anticommutes.
/// Throws NotComplexOrConjugateLinear otherwise (or when u is not
/// orthogonal within 1e-9).
int symmetry_sign(const Eigen::MatrixXd &u);

/// Real 2n x 2n form of a complex matrix.
Eigen::MatrixXd realify(const ComplexMatrix &m);
/// Complex conjugation [x; y] -> [x; -y].
Eigen::MatrixXd conjugation(int n);

/// phi -> U e^{-i h(phi)} phi, stored as its two factors.
struct AutomorphismDecomposition {
  ComplexMatrix unitary;
  /// The internal equivalence, a rigid context with offset -h on every ray.
  Context internal;

  /// nu(phi) = e^{-i h(phi)} phi, evaluated through the context.
  StateVector apply_internal(const StateVector &phi) const;
  StateVector apply(const StateVector &phi) const;
};

/// Splits phi -> U(e^{-i h(phi)} phi). The phase function is checked for
/// orbit constancy on `probes` (each rotated through several angles) and the
/// recomposition is checked against the direct map on the same probes.
/// Throws PhaseNotOrbitConstant when h varies along an orbit by more than
/// 1e-10.
AutomorphismDecomposition decompose_automorphism(
    const ComplexMatrix &u, const std::function<double(const StateVector &)> &h,
    const std::vector<StateVector> &probes);

}  // namespace hv

#endif  // HV_DYNAMICS_HPP

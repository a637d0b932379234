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

#ifndef HV_GEOMETRY_HPP
#define HV_GEOMETRY_HPP

#include "hv/hidden.hpp"
#include "hv/operators.hpp"

namespace hv {

/// The function phi -> <A>_phi on the sphere, for a Hermitian A.
class KaehlerFunction {
 public:
  explicit KaehlerFunction(HermitianOperator a) : a_(std::move(a)) {}

  const HermitianOperator &op() const { return a_; }
  double operator()(const StateVector &phi) const { return expect(a_, phi); }
  RealVector grad(const StateVector &phi) const { return grad_expect(a_, phi); }

 private:
  HermitianOperator a_;
};

/// Pre-symplectic form omega_phi(X, Y) = <J X, Y>.
double omega(const RealVector &x, const RealVector &y);

/// (h o l)(phi) = 1/2 <Grad h, Grad l> + h(phi) l(phi).
double jordan(const KaehlerFunction &h, const KaehlerFunction &l,
              const StateVector &phi);
/// {h, l}(phi) = omega_phi(Grad h, Grad l).
double poisson(const KaehlerFunction &h, const KaehlerFunction &l,
               const StateVector &phi);

/// h o l as a Kaehler function; its operator is (AB + BA) / 2.
KaehlerFunction jordan_function(const KaehlerFunction &h,
                                const KaehlerFunction &l);
/// {h, l} as a Kaehler function; its operator is -i [A, B].
KaehlerFunction poisson_function(const KaehlerFunction &h,
                                 const KaehlerFunction &l);

/// sqrt(<(A - <A>)^2>_phi).
double dispersion(const KaehlerFunction &l, const StateVector &phi);
/// ||Grad <A>|| / sqrt(2).
double dispersion_from_gradient(const KaehlerFunction &l,
                                const StateVector &phi);
/// Standard deviation of the hidden values of f over the orbit of phi,
/// computed from the exact cell arcs.
double dispersion_from_arcs(const HiddenObservable &f, const StateVector &phi);

struct HeisenbergCheck {
  double lhs;
  double rhs_strong;
  double rhs_weak;
  bool pass;
};

inline constexpr double kHeisenbergTol = 1e-10;

/// delta(h) delta(l) >= sqrt([(h o l) - h l]^2 + 1/4 {h,l}^2) >= 1/2 {h,l}.
HeisenbergCheck heisenberg_check(const KaehlerFunction &h,
                                 const KaehlerFunction &l,
                                 const StateVector &phi);

}  // namespace hv

#endif  // HV_GEOMETRY_HPP

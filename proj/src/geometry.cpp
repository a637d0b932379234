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

#include "hv/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hv {

namespace {

void same_space(const KaehlerFunction &h, const KaehlerFunction &l,
                const StateVector &phi) {
  if (h.op().dim() != l.op().dim() || h.op().dim() != phi.complex_dim()) {
    throw DimensionMismatch("bracket operands live on different spaces");
  }
}

}  // namespace

double omega(const RealVector &x, const RealVector &y) {
  return apply_j(x).dot(y);
}

double jordan(const KaehlerFunction &h, const KaehlerFunction &l,
              const StateVector &phi) {
  same_space(h, l, phi);
  return 0.5 * h.grad(phi).dot(l.grad(phi)) + h(phi) * l(phi);
}

double poisson(const KaehlerFunction &h, const KaehlerFunction &l,
               const StateVector &phi) {
  same_space(h, l, phi);
  return omega(h.grad(phi), l.grad(phi));
}

KaehlerFunction jordan_function(const KaehlerFunction &h,
                                const KaehlerFunction &l) {
  return KaehlerFunction(jordan_product(h.op(), l.op()));
}

KaehlerFunction poisson_function(const KaehlerFunction &h,
                                 const KaehlerFunction &l) {
  return KaehlerFunction(lie_product(h.op(), l.op()));
}

double dispersion(const KaehlerFunction &l, const StateVector &phi) {
  const double mean = l(phi);
  const int n = l.op().dim();
  const ComplexMatrix shifted =
      l.op().matrix() - mean * ComplexMatrix::Identity(n, n);
  const ComplexVector psi = phi.unit_complex();
  return (shifted * psi).norm();
}

double dispersion_from_gradient(const KaehlerFunction &l,
                                const StateVector &phi) {
  return l.grad(phi).norm() / kSqrt2;
}

double dispersion_from_arcs(const HiddenObservable &f, const StateVector &phi) {
  const std::vector<ArcSet> cells = f.orbit_cells(phi);
  double mean = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    mean += f.values()[i] * cells[i].measure();
  }
  double var = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double d = f.values()[i] - mean;
    var += cells[i].measure() * d * d;
  }
  return std::sqrt(std::max(var, 0.0));
}

HeisenbergCheck heisenberg_check(const KaehlerFunction &h,
                                 const KaehlerFunction &l,
                                 const StateVector &phi) {
  const double lhs = dispersion(h, phi) * dispersion(l, phi);
  const double cov = jordan(h, l, phi) - h(phi) * l(phi);
  const double bracket = poisson(h, l, phi);
  const double strong = std::sqrt(cov * cov + 0.25 * bracket * bracket);
  const double weak = 0.5 * bracket;
  const bool pass =
      lhs >= strong - kHeisenbergTol && strong >= weak - kHeisenbergTol;
  return {lhs, strong, weak, pass};
}

}  // namespace hv

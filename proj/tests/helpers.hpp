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

// Shared fixtures for the unit tests. Everything here is deliberately
// independent of the library internals: plain complex linear algebra.

#ifndef HV_TESTS_HELPERS_HPP
#define HV_TESTS_HELPERS_HPP

#include <cmath>
#include <random>

#include "hv/realspace.hpp"

namespace hv::testing {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
  return m.cwiseAbs().maxCoeff();
}

/// sqrt(2)(cos b e1 + sin b e2) in complex dimension n.
inline StateVector phi_beta(double b, int n = 2) {
  RealVector v = RealVector::Zero(2 * n);
  v[0] = kSqrt2 * std::cos(b);
  v[1] = kSqrt2 * std::sin(b);
  return StateVector::from_coords(v);
}

/// (e1 + e2) on the sphere; coordinates are exactly (1, 1, 0, 0), so every
/// probability against the standard basis is exactly 1/2.
inline StateVector equal_superposition() {
  RealVector v = RealVector::Zero(4);
  v[0] = 1.0;
  v[1] = 1.0;
  return StateVector::from_coords(v);
}

/// <psi, A psi> for the unit vector psi = phi / sqrt(2), written out as a sum.
inline double textbook_expect(const ComplexMatrix &a, const StateVector &phi) {
  const int n = phi.complex_dim();
  Complex acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex pi(phi.coords()[i] / kSqrt2, phi.coords()[n + i] / kSqrt2);
    for (int j = 0; j < n; ++j) {
      const Complex pj(phi.coords()[j] / kSqrt2, phi.coords()[n + j] / kSqrt2);
      acc += std::conj(pi) * a(i, j) * pj;
    }
  }
  return acc.real();
}

inline ComplexMatrix gaussian_hermitian(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return (m + m.adjoint()) / 2.0;
}

}  // namespace hv::testing

#endif  // HV_TESTS_HELPERS_HPP

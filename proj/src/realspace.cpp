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

#include "hv/realspace.hpp"

#include <cmath>
#include <string>

namespace hv {

double wrap_angle(double theta) {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  return r;
}

ComplexSpace::ComplexSpace(int n) : n_(n) {
  if (n <= 0) throw DimensionMismatch("complex dimension must be positive");
}

RealVector ComplexSpace::apply_j(const RealVector &v) const {
  if (v.size() != real_dim()) throw DimensionMismatch("apply_j");
  return hv::apply_j(v);
}

RealVector apply_j(const RealVector &v) {
  const Eigen::Index n = v.size() / 2;
  RealVector out(v.size());
  out.head(n) = -v.tail(n);
  out.tail(n) = v.head(n);
  return out;
}

RealVector to_real(const ComplexVector &z) {
  const Eigen::Index n = z.size();
  RealVector v(2 * n);
  v.head(n) = z.real();
  v.tail(n) = z.imag();
  return v;
}

ComplexVector to_complex(const RealVector &v) {
  const Eigen::Index n = v.size() / 2;
  ComplexVector z(n);
  for (Eigen::Index k = 0; k < n; ++k) z[k] = Complex(v[k], v[n + k]);
  return z;
}

StateVector StateVector::from_coords(const RealVector &coords) {
  if (coords.size() == 0 || coords.size() % 2 != 0) {
    throw DimensionMismatch("state coordinates must have even positive length");
  }
  if (std::abs(coords.norm() - kSqrt2) > kSphereTol * 10) {
    throw DimensionMismatch("state is not on the sphere of radius sqrt(2)");
  }
  return StateVector(coords);
}

StateVector StateVector::normalized(const RealVector &coords) {
  if (coords.size() == 0 || coords.size() % 2 != 0) {
    throw DimensionMismatch("state coordinates must have even positive length");
  }
  const double norm = coords.norm();
  if (!(norm > 0.0)) throw DimensionMismatch("zero vector has no ray");
  if (norm == kSqrt2) return StateVector(coords);
  return StateVector(coords * (kSqrt2 / norm));
}

StateVector StateVector::from_complex(const ComplexVector &z) {
  return normalized(to_real(z));
}

StateVector StateVector::basis(int n, int k) {
  RealVector v = RealVector::Zero(2 * n);
  v[k] = kSqrt2;
  return StateVector(v);
}

ComplexVector StateVector::unit_complex() const {
  return to_complex(coords_) / kSqrt2;
}

StateVector rotate(const StateVector &phi, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return StateVector::normalized(c * phi.coords() + s * apply_j(phi.coords()));
}

Complex herm_inner(const RealVector &phi, const RealVector &psi) {
  if (phi.size() != psi.size()) throw DimensionMismatch("herm_inner");
  return {phi.dot(psi), apply_j(phi).dot(psi)};
}

Complex herm_inner(const StateVector &phi, const StateVector &psi) {
  return herm_inner(phi.coords(), psi.coords());
}

bool same_ray(const StateVector &phi, const StateVector &psi, double tol) {
  if (phi.real_dim() != psi.real_dim()) return false;
  return std::abs(std::abs(herm_inner(phi, psi)) - 2.0) <= tol;
}

double arg_rel(const StateVector &psi, const StateVector &phi) {
  const Complex z = herm_inner(phi, psi);
  if (std::abs(std::abs(z) - 2.0) > kSameRayTol) {
    throw NotSameRay("|<<phi,psi>>| = " + std::to_string(std::abs(z)));
  }
  double theta = std::atan2(z.imag(), z.real());
  if (theta <= -kPi) theta = kPi;
  return theta;
}

double phase_distance(const StateVector &phi, const StateVector &psi) {
  return std::abs(arg_rel(psi, phi));
}

double ray_distance(const StateVector &phi, const StateVector &psi) {
  return 1.0 - std::abs(herm_inner(phi, psi)) / 2.0;
}

StateVector pivot_section(const StateVector &phi) {
  const ComplexVector z = phi.as_complex();
  double max_mod = 0.0;
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    max_mod = std::max(max_mod, std::abs(z[k]));
  }
  Eigen::Index pivot = 0;
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    if (std::abs(z[k]) >= max_mod - 1e-12) {
      pivot = k;
      break;
    }
  }
  const Complex unit = std::conj(z[pivot]) / std::abs(z[pivot]);
  ComplexVector out = z * unit;
  out[pivot] = Complex(std::abs(z[pivot]), 0.0);
  return StateVector::normalized(to_real(out));
}

GaugeSection::GaugeSection() : id_("pivot") {}

GaugeSection::GaugeSection(std::string id, Shift shift)
    : id_(std::move(id)), shift_(std::move(shift)) {}

StateVector GaugeSection::operator()(const StateVector &phi) const {
  StateVector canonical = pivot_section(phi);
  if (!shift_) return canonical;
  return rotate(canonical, shift_(canonical));
}

StateVector section(const StateVector &phi) { return pivot_section(phi); }

namespace {

std::uint64_t hash_coords(const RealVector &v) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const auto q = static_cast<std::uint64_t>(std::llround(v[k] * 1e9));
    for (int b = 0; b < 8; ++b) {
      h ^= (q >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace

Ray::Ray(const StateVector &any_member)
    : rep_(pivot_section(any_member)), label_(hash_coords(rep_.coords())) {}

}  // namespace hv

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

#ifndef HV_REALSPACE_HPP
#define HV_REALSPACE_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "hv/errors.hpp"

namespace hv {

using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Tolerance on ||<<phi,psi>>| - 2| for two sphere states to share a ray.
inline constexpr double kSameRayTol = 1e-9;
/// Tolerance on the sphere radius check.
inline constexpr double kSphereTol = 1e-12;

/// Maps an angle to the half-open interval (-pi, pi].
double wrap_angle(double theta);

/// The real space R^{2n} underlying C^n. A real vector [x; y] stands for the
/// complex vector x + iy.
class ComplexSpace {
 public:
  explicit ComplexSpace(int n);

  int complex_dim() const { return n_; }
  int real_dim() const { return 2 * n_; }

  /// J[x; y] = [-y; x], multiplication by i.
  RealVector apply_j(const RealVector &v) const;

  bool operator==(const ComplexSpace &) const = default;

 private:
  int n_;
};

RealVector to_real(const ComplexVector &z);
ComplexVector to_complex(const RealVector &v);

/// A point of the sphere of radius sqrt(2) in R^{2n}. The unit complex vector
/// it represents is coords / sqrt(2).
class StateVector {
 public:
  /// Takes coordinates already on the sphere; throws if the norm is off by
  /// more than kSphereTol (relative to sqrt(2)).
  static StateVector from_coords(const RealVector &coords);
  /// Rescales any nonzero complex vector onto the sphere.
  static StateVector from_complex(const ComplexVector &z);
  /// Rescales any nonzero real 2n-vector onto the sphere.
  static StateVector normalized(const RealVector &coords);
  /// sqrt(2) times the k-th standard complex basis vector.
  static StateVector basis(int n, int k);

  const RealVector &coords() const { return coords_; }
  ComplexSpace space() const { return ComplexSpace(complex_dim()); }
  int complex_dim() const { return static_cast<int>(coords_.size() / 2); }
  int real_dim() const { return static_cast<int>(coords_.size()); }

  /// The unit complex vector psi = phi / sqrt(2).
  ComplexVector unit_complex() const;
  /// The complex vector with the full sqrt(2) norm.
  ComplexVector as_complex() const { return to_complex(coords_); }

 private:
  explicit StateVector(RealVector coords) : coords_(std::move(coords)) {}
  RealVector coords_;
};

RealVector apply_j(const RealVector &v);

/// rho_theta(phi) = cos(theta) phi + sin(theta) J phi.
StateVector rotate(const StateVector &phi, double theta);

/// <<phi, psi>> = <phi, psi> + i <J phi, psi>; antilinear in the first slot.
Complex herm_inner(const RealVector &phi, const RealVector &psi);
Complex herm_inner(const StateVector &phi, const StateVector &psi);

bool same_ray(const StateVector &phi, const StateVector &psi,
              double tol = kSameRayTol);

/// The theta in (-pi, pi] with psi = rotate(phi, theta).
double arg_rel(const StateVector &psi, const StateVector &phi);

/// |arg_rel(psi, phi)|, a metric on one orbit.
double phase_distance(const StateVector &phi, const StateVector &psi);

/// 1 - |<<phi, psi>>| / 2; zero iff phi and psi share a ray.
double ray_distance(const StateVector &phi, const StateVector &psi);

/// The pivot rule: the complex coordinate of largest modulus (lowest index on
/// ties within 1e-12) is rotated onto the positive real axis.
StateVector pivot_section(const StateVector &phi);

/// A choice of one representative per ray.
///
/// The default is the pivot rule. A gauge can be shifted by a ray-dependent
/// angle g, giving sigma'[phi] = rotate(pivot[phi], g(pivot[phi])); the
/// shifted rule is still a section since g only sees the canonical point.
class GaugeSection {
 public:
  using Shift = std::function<double(const StateVector &canonical)>;

  GaugeSection();
  /// A section shifted from the pivot rule. The id distinguishes gauges in
  /// compatibility checks; two sections with the same id must be the same
  /// rule.
  GaugeSection(std::string id, Shift shift);

  StateVector operator()(const StateVector &phi) const;
  const std::string &id() const { return id_; }

  bool operator==(const GaugeSection &o) const { return id_ == o.id_; }

 private:
  std::string id_;
  Shift shift_;
};

/// section(phi) under the default pivot gauge.
StateVector section(const StateVector &phi);

/// An S^1-orbit, stored through its pivot representative.
class Ray {
 public:
  explicit Ray(const StateVector &any_member);

  const StateVector &representative() const { return rep_; }
  /// Stable 64-bit label of the orbit (hash of the rounded canonical point).
  std::uint64_t label() const { return label_; }
  bool contains(const StateVector &phi) const { return same_ray(rep_, phi); }

 private:
  StateVector rep_;
  std::uint64_t label_;
};

}  // namespace hv

#endif  // HV_REALSPACE_HPP

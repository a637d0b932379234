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

#ifndef HV_OPERATORS_HPP
#define HV_OPERATORS_HPP

#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "hv/realspace.hpp"

namespace hv {

/// Inputs whose anti-Hermitian part exceeds this are rejected.
inline constexpr double kHermitianTol = 1e-8;
/// Default distance below which eigenvalues collapse into one eigenspace.
inline constexpr double kEigenMergeTol = 1e-10;

/// A self-adjoint complex linear operator on C^n.
class HermitianOperator {
 public:
  /// Symmetrizes (M + M^*)/2; throws NotHermitian when ||M - M^*||_max
  /// exceeds kHermitianTol.
  explicit HermitianOperator(const ComplexMatrix &m);

  static HermitianOperator identity(int n);
  static HermitianOperator zero(int n);
  static HermitianOperator diag(const std::vector<double> &values);
  static HermitianOperator pauli_x();
  static HermitianOperator pauli_y();
  static HermitianOperator pauli_z();
  /// |u><u| for a nonzero vector u (normalized internally).
  static HermitianOperator ray_projector(const ComplexVector &u);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix &matrix() const { return m_; }

  /// Action on the real representation of a vector.
  RealVector apply(const RealVector &v) const;
  /// The equivalent real 2n x 2n matrix [[Re, -Im], [Im, Re]].
  Eigen::MatrixXd real_form() const;

  bool is_projector(double tol = 1e-9) const;

  HermitianOperator operator+(const HermitianOperator &o) const;
  HermitianOperator operator-(const HermitianOperator &o) const;
  HermitianOperator operator*(double s) const;

 private:
  ComplexMatrix m_;
};

/// (AB + BA) / 2.
HermitianOperator jordan_product(const HermitianOperator &a,
                                 const HermitianOperator &b);
/// -i (AB - BA).
HermitianOperator lie_product(const HermitianOperator &a,
                              const HermitianOperator &b);

/// A unitary drawn from the Haar measure (QR of a complex Gaussian matrix
/// with the diagonal phases of R removed).
ComplexMatrix random_unitary(int n, std::mt19937_64 &rng);
/// U diag(values) U^* with U = random_unitary.
HermitianOperator random_hermitian_with_spectrum(
    const std::vector<double> &values, std::mt19937_64 &rng);
/// Entries i.i.d. complex Gaussian, then symmetrized.
HermitianOperator random_hermitian(int n, std::mt19937_64 &rng);
/// Projector onto a uniformly random rank-k subspace.
HermitianOperator random_projector(int n, int rank, std::mt19937_64 &rng);
/// A uniformly distributed point on the sphere.
StateVector random_state(int n, std::mt19937_64 &rng);

/// A finite union of intervals of the real line, kept sorted, disjoint and
/// merged. Endpoints may be infinite; infinite endpoints are always open.
class BorelSet {
 public:
  struct Interval {
    double lo;
    double hi;
    bool lo_closed;
    bool hi_closed;
  };

  BorelSet() = default;
  explicit BorelSet(std::vector<Interval> intervals);

  static BorelSet empty() { return {}; }
  static BorelSet all();
  static BorelSet point(double x);
  static BorelSet points(const std::vector<double> &xs);
  /// (-inf, s].
  static BorelSet at_most(double s);
  static BorelSet closed(double lo, double hi);
  /// (lo, hi].
  static BorelSet half_open(double lo, double hi);

  bool contains(double x) const;
  bool is_empty() const { return intervals_.empty(); }
  const std::vector<Interval> &intervals() const { return intervals_; }

  BorelSet unite(const BorelSet &o) const;

 private:
  std::vector<Interval> intervals_;
};

/// Distinct ascending eigenvalues with their eigenprojectors.
class SpectralDecomposition {
 public:
  /// Validates sum E_i = I, E_i E_j = 0, E_i^2 = E_i (1e-9) and strictly
  /// ascending eigenvalues; throws NotAResolution otherwise.
  SpectralDecomposition(std::vector<double> eigenvalues,
                        std::vector<ComplexMatrix> projectors);

  int dim() const { return static_cast<int>(projectors_.front().rows()); }
  std::size_t size() const { return eigenvalues_.size(); }
  const std::vector<double> &eigenvalues() const { return eigenvalues_; }
  const std::vector<ComplexMatrix> &projectors() const { return projectors_; }
  std::vector<int> multiplicities() const;

  /// Sum lambda_i E_i.
  HermitianOperator reconstruct() const;

  /// p_i = <E_i>_phi for every eigenspace, each in [0, 1].
  std::vector<double> weights(const StateVector &phi) const;

 private:
  std::vector<double> eigenvalues_;
  std::vector<ComplexMatrix> projectors_;
};

SpectralDecomposition spectral_decompose(const HermitianOperator &a,
                                         double tol = kEigenMergeTol);

/// The decomposition {0: I - E, 1: E} of a projector, with empty parts
/// dropped. Throws NotProjector when E is not idempotent within 1e-9.
SpectralDecomposition projector_decomposition(const HermitianOperator &e);

/// <A>_phi = (1/2) <phi, A phi>.
double expect(const HermitianOperator &a, const StateVector &phi);
double expect(const ComplexMatrix &a, const StateVector &phi);

/// A phi - <A>_phi phi, the sphere gradient of <A>.
RealVector grad_expect(const HermitianOperator &a, const StateVector &phi);

/// Sum of the eigenprojectors whose eigenvalue lies in b.
HermitianOperator spectral_projector(const SpectralDecomposition &d,
                                     const BorelSet &b);

/// <E_(-inf, s]>_phi, exactly 1 at or above the top eigenvalue.
double cumulative(const SpectralDecomposition &d, const StateVector &phi,
                  double s);

/// The decomposition of b(T): eigenvalues b(lambda_i), with projectors merged
/// where b sends several eigenvalues within tol of each other.
SpectralDecomposition borel_transform(const SpectralDecomposition &d,
                                      const std::function<double(double)> &b,
                                      double tol = kEigenMergeTol);

}  // namespace hv

#endif  // HV_OPERATORS_HPP

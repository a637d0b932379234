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

#include "hv/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hv {

namespace {

double max_abs(const ComplexMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

HermitianOperator::HermitianOperator(const ComplexMatrix &m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionMismatch("operator must be a nonempty square matrix");
  }
  const double asym = max_abs(m - m.adjoint());
  if (asym > kHermitianTol) {
    throw NotHermitian("||A - A^*||_max = " + std::to_string(asym));
  }
  m_ = (m + m.adjoint()) / 2.0;
}

HermitianOperator HermitianOperator::identity(int n) {
  return HermitianOperator(ComplexMatrix::Identity(n, n));
}

HermitianOperator HermitianOperator::zero(int n) {
  return HermitianOperator(ComplexMatrix::Zero(n, n));
}

HermitianOperator HermitianOperator::diag(const std::vector<double> &values) {
  ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return HermitianOperator(m);
}

HermitianOperator HermitianOperator::pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianOperator(m);
}

HermitianOperator HermitianOperator::pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return HermitianOperator(m);
}

HermitianOperator HermitianOperator::pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return HermitianOperator(m);
}

HermitianOperator HermitianOperator::ray_projector(const ComplexVector &u) {
  const double norm = u.norm();
  if (!(norm > 0.0)) throw DimensionMismatch("ray_projector of zero vector");
  const ComplexVector v = u / norm;
  return HermitianOperator(v * v.adjoint());
}

RealVector HermitianOperator::apply(const RealVector &v) const {
  if (v.size() != 2 * m_.rows()) throw DimensionMismatch("operator apply");
  return to_real(m_ * to_complex(v));
}

Eigen::MatrixXd HermitianOperator::real_form() const {
  const Eigen::Index n = m_.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m_.real();
  r.topRightCorner(n, n) = -m_.imag();
  r.bottomLeftCorner(n, n) = m_.imag();
  r.bottomRightCorner(n, n) = m_.real();
  return r;
}

bool HermitianOperator::is_projector(double tol) const {
  return max_abs(m_ * m_ - m_) <= tol;
}

HermitianOperator HermitianOperator::operator+(
    const HermitianOperator &o) const {
  if (o.dim() != dim()) throw DimensionMismatch("operator sum");
  return HermitianOperator(m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(
    const HermitianOperator &o) const {
  if (o.dim() != dim()) throw DimensionMismatch("operator difference");
  return HermitianOperator(m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s);
}

HermitianOperator jordan_product(const HermitianOperator &a,
                                 const HermitianOperator &b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("jordan_product");
  const ComplexMatrix ab = a.matrix() * b.matrix();
  return HermitianOperator((ab + ab.adjoint()) / 2.0);
}

HermitianOperator lie_product(const HermitianOperator &a,
                              const HermitianOperator &b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("lie_product");
  const ComplexMatrix ab = a.matrix() * b.matrix();
  return HermitianOperator(Complex(0, -1) * (ab - ab.adjoint()));
}

ComplexMatrix random_unitary(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

HermitianOperator random_hermitian_with_spectrum(
    const std::vector<double> &values, std::mt19937_64 &rng) {
  const int n = static_cast<int>(values.size());
  const ComplexMatrix u = random_unitary(n, rng);
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = values[i];
  return HermitianOperator(u * d * u.adjoint());
}

HermitianOperator random_hermitian(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return HermitianOperator((z + z.adjoint()) / 2.0);
}

HermitianOperator random_projector(int n, int rank, std::mt19937_64 &rng) {
  const ComplexMatrix u = random_unitary(n, rng);
  const ComplexMatrix v = u.leftCols(rank);
  return HermitianOperator(v * v.adjoint());
}

StateVector random_state(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  RealVector v(2 * n);
  for (int k = 0; k < 2 * n; ++k) v[k] = gauss(rng);
  return StateVector::normalized(v);
}

// ---------------------------------------------------------------------------
// BorelSet

BorelSet::BorelSet(std::vector<Interval> intervals) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Interval> kept;
  for (Interval iv : intervals) {
    if (iv.lo == -inf) iv.lo_closed = false;
    if (iv.hi == inf) iv.hi_closed = false;
    const bool nonempty =
        iv.lo < iv.hi || (iv.lo == iv.hi && iv.lo_closed && iv.hi_closed);
    if (nonempty) kept.push_back(iv);
  }
  std::sort(kept.begin(), kept.end(), [](const Interval &a, const Interval &b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (const Interval &iv : kept) {
    if (!intervals_.empty()) {
      Interval &last = intervals_.back();
      const bool touches =
          iv.lo < last.hi ||
          (iv.lo == last.hi && (last.hi_closed || iv.lo_closed));
      if (touches) {
        if (iv.hi > last.hi) {
          last.hi = iv.hi;
          last.hi_closed = iv.hi_closed;
        } else if (iv.hi == last.hi) {
          last.hi_closed = last.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    intervals_.push_back(iv);
  }
}

BorelSet BorelSet::all() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return BorelSet({{-inf, inf, false, false}});
}

BorelSet BorelSet::point(double x) { return BorelSet({{x, x, true, true}}); }

BorelSet BorelSet::points(const std::vector<double> &xs) {
  std::vector<Interval> ivs;
  for (double x : xs) ivs.push_back({x, x, true, true});
  return BorelSet(std::move(ivs));
}

BorelSet BorelSet::at_most(double s) {
  return BorelSet(
      {{-std::numeric_limits<double>::infinity(), s, false, true}});
}

BorelSet BorelSet::closed(double lo, double hi) {
  return BorelSet({{lo, hi, true, true}});
}

BorelSet BorelSet::half_open(double lo, double hi) {
  return BorelSet({{lo, hi, false, true}});
}

bool BorelSet::contains(double x) const {
  for (const Interval &iv : intervals_) {
    const bool above = iv.lo < x || (iv.lo_closed && iv.lo == x);
    const bool below = x < iv.hi || (iv.hi_closed && iv.hi == x);
    if (above && below) return true;
  }
  return false;
}

BorelSet BorelSet::unite(const BorelSet &o) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), o.intervals_.begin(), o.intervals_.end());
  return BorelSet(std::move(all));
}

// ---------------------------------------------------------------------------
// SpectralDecomposition

SpectralDecomposition::SpectralDecomposition(
    std::vector<double> eigenvalues, std::vector<ComplexMatrix> projectors)
    : eigenvalues_(std::move(eigenvalues)), projectors_(std::move(projectors)) {
  constexpr double tol = 1e-9;
  if (eigenvalues_.empty() || eigenvalues_.size() != projectors_.size()) {
    throw NotAResolution("need one projector per eigenvalue");
  }
  const Eigen::Index n = projectors_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    const ComplexMatrix &e = projectors_[i];
    if (e.rows() != n || e.cols() != n) {
      throw DimensionMismatch("projector sizes differ");
    }
    if (i > 0 && !(eigenvalues_[i - 1] < eigenvalues_[i])) {
      throw NotAResolution("eigenvalues must be strictly ascending");
    }
    if (max_abs(e * e - e) > tol || max_abs(e - e.adjoint()) > tol) {
      throw NotAResolution("component " + std::to_string(i) +
                           " is not an orthogonal projector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (max_abs(e * projectors_[j]) > tol) {
        throw NotAResolution("components are not mutually orthogonal");
      }
    }
    sum += e;
  }
  if (max_abs(sum - ComplexMatrix::Identity(n, n)) > tol) {
    throw NotAResolution("projectors do not sum to the identity");
  }
}

std::vector<int> SpectralDecomposition::multiplicities() const {
  std::vector<int> out;
  for (const ComplexMatrix &e : projectors_) {
    out.push_back(static_cast<int>(std::lround(e.trace().real())));
  }
  return out;
}

HermitianOperator SpectralDecomposition::reconstruct() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
  for (std::size_t i = 0; i < size(); ++i) m += eigenvalues_[i] * projectors_[i];
  return HermitianOperator(m);
}

std::vector<double> SpectralDecomposition::weights(
    const StateVector &phi) const {
  if (phi.complex_dim() != dim()) throw DimensionMismatch("weights");
  // 1/2 ||E z||^2 on the sphere coordinates; avoids rounding through 1/sqrt(2).
  const ComplexVector z = phi.as_complex();
  std::vector<double> out;
  out.reserve(size());
  for (const ComplexMatrix &e : projectors_) {
    out.push_back(std::min(1.0, 0.5 * (e * z).squaredNorm()));
  }
  return out;
}

SpectralDecomposition spectral_decompose(const HermitianOperator &a,
                                         double tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw EigSolverFailure("self-adjoint eigensolver did not converge");
  }
  const RealVector &vals = solver.eigenvalues();
  const ComplexMatrix &vecs = solver.eigenvectors();
  const Eigen::Index n = vals.size();

  std::vector<double> eigenvalues;
  std::vector<ComplexMatrix> projectors;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && vals[end] - vals[end - 1] <= tol) ++end;
    const ComplexMatrix v = vecs.middleCols(start, end - start);
    eigenvalues.push_back(vals.segment(start, end - start).mean());
    projectors.push_back(v * v.adjoint());
    start = end;
  }
  return SpectralDecomposition(std::move(eigenvalues), std::move(projectors));
}

SpectralDecomposition projector_decomposition(const HermitianOperator &e) {
  if (!e.is_projector()) throw NotProjector("E^2 != E within 1e-9");
  const int n = e.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const long rank = std::lround(e.matrix().trace().real());
  std::vector<double> values;
  std::vector<ComplexMatrix> parts;
  if (rank < n) {
    values.push_back(0.0);
    parts.push_back(id - e.matrix());
  }
  if (rank > 0) {
    values.push_back(1.0);
    parts.push_back(e.matrix());
  }
  return SpectralDecomposition(std::move(values), std::move(parts));
}

double expect(const ComplexMatrix &a, const StateVector &phi) {
  if (a.rows() != phi.complex_dim()) throw DimensionMismatch("expect");
  const ComplexVector z = phi.as_complex();
  return 0.5 * z.dot(a * z).real();
}

double expect(const HermitianOperator &a, const StateVector &phi) {
  return expect(a.matrix(), phi);
}

RealVector grad_expect(const HermitianOperator &a, const StateVector &phi) {
  return a.apply(phi.coords()) - expect(a, phi) * phi.coords();
}

HermitianOperator spectral_projector(const SpectralDecomposition &d,
                                     const BorelSet &b) {
  ComplexMatrix m = ComplexMatrix::Zero(d.dim(), d.dim());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (b.contains(d.eigenvalues()[i])) m += d.projectors()[i];
  }
  return HermitianOperator(m);
}

double cumulative(const SpectralDecomposition &d, const StateVector &phi,
                  double s) {
  const std::vector<double> &vals = d.eigenvalues();
  if (s >= vals.back()) return 1.0;
  const std::vector<double> w = d.weights(phi);
  double total = 0.0;
  for (std::size_t i = 0; i < vals.size() && vals[i] <= s; ++i) total += w[i];
  return std::min(total, 1.0);
}

SpectralDecomposition borel_transform(const SpectralDecomposition &d,
                                      const std::function<double(double)> &b,
                                      double tol) {
  struct Part {
    double value;
    ComplexMatrix projector;
  };
  std::vector<Part> parts;
  for (std::size_t i = 0; i < d.size(); ++i) {
    parts.push_back({b(d.eigenvalues()[i]), d.projectors()[i]});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part &x, const Part &y) { return x.value < y.value; });
  std::vector<double> values;
  std::vector<ComplexMatrix> projectors;
  std::size_t start = 0;
  while (start < parts.size()) {
    std::size_t end = start + 1;
    ComplexMatrix sum = parts[start].projector;
    while (end < parts.size() &&
           parts[end].value - parts[end - 1].value <= tol) {
      sum += parts[end].projector;
      ++end;
    }
    values.push_back(parts[start].value);
    projectors.push_back(std::move(sum));
    start = end;
  }
  return SpectralDecomposition(std::move(values), std::move(projectors));
}

}  // namespace hv

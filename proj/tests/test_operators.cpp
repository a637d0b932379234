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

#include <doctest.h>

#include "helpers.hpp"
#include "hv/errors.hpp"
#include "hv/operators.hpp"

using namespace hv;
using hv::testing::gaussian_hermitian;
using hv::testing::max_abs;
using hv::testing::phi_beta;
using hv::testing::textbook_expect;

namespace {

int rank(const ComplexMatrix &p) {
  return static_cast<int>(std::lround(p.trace().real()));
}

}  // namespace

TEST_CASE("spectral_decompose examples") {
  SUBCASE("diag(1,1,2)") {
    const SpectralDecomposition d = spectral_decompose(HermitianOperator::diag({1, 1, 2}));
    REQUIRE(d.size() == 2);
    CHECK(d.eigenvalues()[0] == doctest::Approx(1.0));
    CHECK(d.eigenvalues()[1] == doctest::Approx(2.0));
    CHECK(rank(d.projectors()[0]) == 2);
    CHECK(rank(d.projectors()[1]) == 1);
    CHECK(d.multiplicities() == std::vector<int>{2, 1});
  }
  SUBCASE("sigma_x") {
    const SpectralDecomposition d = spectral_decompose(HermitianOperator::pauli_x());
    REQUIRE(d.size() == 2);
    CHECK(d.eigenvalues()[0] == doctest::Approx(-1.0));
    CHECK(d.eigenvalues()[1] == doctest::Approx(1.0));
    ComplexMatrix minus(2, 2), plus(2, 2);
    minus << 0.5, -0.5, -0.5, 0.5;
    plus << 0.5, 0.5, 0.5, 0.5;
    CHECK(max_abs(d.projectors()[0] - minus) <= 1e-12);
    CHECK(max_abs(d.projectors()[1] - plus) <= 1e-12);
  }
  SUBCASE("identity") {
    const SpectralDecomposition d = spectral_decompose(HermitianOperator::identity(3));
    REQUIRE(d.size() == 1);
    CHECK(d.eigenvalues()[0] == doctest::Approx(1.0));
    CHECK(max_abs(d.projectors()[0] - ComplexMatrix::Identity(3, 3)) <= 1e-12);
  }
}

TEST_CASE("hermiticity is enforced with a small symmetrization window") {
  ComplexMatrix m(2, 2);
  m << 1, Complex(0, 1e-9), 0, 2;
  const HermitianOperator a(m);
  CHECK(max_abs(a.matrix() - a.matrix().adjoint()) == 0.0);
  m(0, 1) = 1e-6;
  CHECK_THROWS_AS(HermitianOperator{m}, NotHermitian);
}

TEST_CASE("close eigenvalues merge below the tolerance") {
  const HermitianOperator a = HermitianOperator::diag({1.0, 1.0 + 1e-12, 3.0});
  CHECK(spectral_decompose(a).size() == 2);
  CHECK(spectral_decompose(a, 1e-14).size() == 3);
}

TEST_CASE("decomposition invariants on random operators") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 16;
    const HermitianOperator a(gaussian_hermitian(n, rng));
    const SpectralDecomposition d = spectral_decompose(a);
    CHECK(max_abs(d.reconstruct().matrix() - a.matrix()) <= 1e-9);
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const ComplexMatrix &e = d.projectors()[i];
      sum += e;
      CHECK(max_abs(e * e - e) <= 1e-10);
      CHECK(max_abs(e - e.adjoint()) <= 1e-10);
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        CHECK(max_abs(e * d.projectors()[j]) <= 1e-10);
      }
      if (i > 0) CHECK(d.eigenvalues()[i] > d.eigenvalues()[i - 1]);
    }
    CHECK(max_abs(sum - ComplexMatrix::Identity(n, n)) <= 1e-10);
  }
}

TEST_CASE("expect examples") {
  std::mt19937_64 rng(12);
  const StateVector phi = random_state(4, rng);
  CHECK(std::abs(expect(HermitianOperator::identity(4), phi) - 1.0) <= 1e-12);
  for (double beta : {0.0, 0.3, kPi / 4, 1.2, 2.9}) {
    const double c = std::cos(beta);
    CHECK(std::abs(expect(HermitianOperator::diag({1, 0}), phi_beta(beta)) - c * c) <=
          1e-12);
  }
  CHECK(std::abs(expect(HermitianOperator::pauli_z(), StateVector::basis(2, 0)) - 1.0) <=
        1e-15);
}

TEST_CASE("expect matches the textbook formula and ignores the phase") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + trial % 8;
    const HermitianOperator a(gaussian_hermitian(n, rng));
    const StateVector phi = random_state(n, rng);
    const double e = expect(a, phi);
    CHECK(std::abs(e - textbook_expect(a.matrix(), phi)) <= 1e-12);
    CHECK(std::abs(expect(a, rotate(phi, u(rng))) - e) <= 1e-12);
    // 1/2 <phi, A phi> in the real picture.
    CHECK(std::abs(0.5 * phi.coords().dot(a.apply(phi.coords())) - e) <= 1e-12);
  }
}

TEST_CASE("grad_expect examples") {
  const StateVector e1 = StateVector::basis(2, 0);
  CHECK(max_abs(grad_expect(HermitianOperator::pauli_z(), e1)) <= 1e-15);

  const StateVector phi = phi_beta(kPi / 4);
  const RealVector g = grad_expect(HermitianOperator::pauli_z(), phi);
  RealVector want = RealVector::Zero(4);
  want[0] = kSqrt2 * std::cos(kPi / 4);
  want[1] = -kSqrt2 * std::sin(kPi / 4);
  CHECK(max_abs(g - want) <= 1e-12);
  CHECK(std::abs(g.dot(phi.coords())) <= 1e-12);
}

TEST_CASE("projector gradients satisfy |grad|^2 = 2(p - p^2)") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 7;
    const int r = trial % (n + 1);
    const HermitianOperator e = random_projector(n, r, rng);
    const StateVector phi = random_state(n, rng);
    const double p = expect(e, phi);
    const RealVector g = grad_expect(e, phi);
    CHECK(std::abs(g.squaredNorm() - 2.0 * (p - p * p)) <= 1e-9);
    CHECK(std::abs(g.dot(phi.coords())) <= 1e-10);
  }
}

TEST_CASE("spectral_projector examples") {
  const SpectralDecomposition d = spectral_decompose(HermitianOperator::pauli_z());
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  CHECK(max_abs(spectral_projector(d, BorelSet::point(1)).matrix() - p0) <= 1e-12);
  CHECK(max_abs(spectral_projector(d, BorelSet::empty()).matrix()) == 0.0);
  CHECK(max_abs(spectral_projector(d, BorelSet::at_most(-2)).matrix()) == 0.0);
  CHECK(max_abs(spectral_projector(d, BorelSet::all()).matrix() -
                ComplexMatrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("cumulative examples") {
  const SpectralDecomposition d = spectral_decompose(HermitianOperator::pauli_z());
  const StateVector eq = phi_beta(kPi / 4);
  CHECK(std::abs(cumulative(d, eq, -1.0) - 0.5) <= 1e-12);
  CHECK(cumulative(d, eq, 1.0) == 1.0);
  CHECK(cumulative(d, StateVector::basis(2, 1), -1.0) == doctest::Approx(1.0));
  CHECK(cumulative(d, eq, -1.5) == 0.0);
  // Right continuity: the jump sits at the eigenvalue.
  CHECK(cumulative(d, eq, -1.0 - 1e-12) == 0.0);
}

TEST_CASE("borel_transform examples") {
  const SpectralDecomposition d = spectral_decompose(HermitianOperator::pauli_z());
  const SpectralDecomposition same = borel_transform(d, [](double x) { return x; });
  CHECK(same.eigenvalues() == d.eigenvalues());
  const SpectralDecomposition sq = borel_transform(d, [](double x) { return x * x; });
  REQUIRE(sq.size() == 1);
  CHECK(sq.eigenvalues()[0] == 1.0);
  CHECK(max_abs(sq.projectors()[0] - ComplexMatrix::Identity(2, 2)) <= 1e-12);
  const SpectralDecomposition ind =
      borel_transform(d, [](double x) { return x == 1.0 ? 1.0 : 0.0; });
  REQUIRE(ind.size() == 2);
  CHECK(ind.eigenvalues() == std::vector<double>{0.0, 1.0});
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  CHECK(max_abs(ind.projectors()[1] - p0) <= 1e-12);
}

TEST_CASE("borel_transform is functorial and matches preimages") {
  std::mt19937_64 rng(15);
  // Jumps of b sit away from every value c can take on the half-integer grid.
  const auto b = [](double x) { return std::floor(x / 2.0 + 0.3); };
  const auto c = [](double x) { return x * x; };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<double> spec;
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int i = 0; i < n; ++i) spec.push_back(pick(rng) * 0.5);
    const SpectralDecomposition d =
        spectral_decompose(random_hermitian_with_spectrum(spec, rng));
    const SpectralDecomposition once =
        borel_transform(d, [&](double x) { return b(c(x)); });
    const SpectralDecomposition twice = borel_transform(borel_transform(d, c), b);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(once.eigenvalues()[i] == doctest::Approx(twice.eigenvalues()[i]));
    }
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(max_abs(once.projectors()[i] - twice.projectors()[i]) <= 1e-10);
    }
    // E_B of b(T) equals E_{b^{-1}(B)} of T.
    for (double y : once.eigenvalues()) {
      std::vector<double> pre;
      for (double x : d.eigenvalues()) {
        if (std::abs(b(c(x)) - y) <= 1e-9) pre.push_back(x);
      }
      CHECK(max_abs(spectral_projector(once, BorelSet::point(y)).matrix() -
                    spectral_projector(d, BorelSet::points(pre)).matrix()) <= 1e-10);
    }
  }
}

TEST_CASE("borel sets are canonical") {
  const BorelSet s({{2, 3, true, false}, {0, 1, false, true}, {1, 2, false, true}});
  // (0,1] u (1,2] u [2,3) = (0,3)
  REQUIRE(s.intervals().size() == 1);
  CHECK(s.intervals()[0].lo == 0.0);
  CHECK(s.intervals()[0].hi == 3.0);
  CHECK_FALSE(s.contains(0.0));
  CHECK(s.contains(2.0));
  CHECK_FALSE(s.contains(3.0));
  const BorelSet gap = BorelSet::half_open(0, 1).unite(BorelSet::half_open(2, 3));
  CHECK(gap.intervals().size() == 2);
  CHECK(BorelSet::points({1, 1, 2}).intervals().size() == 2);
  CHECK(BorelSet::at_most(0.5).contains(-1e300));
}

TEST_CASE("operator products") {
  const HermitianOperator x = HermitianOperator::pauli_x();
  const HermitianOperator y = HermitianOperator::pauli_y();
  const HermitianOperator z = HermitianOperator::pauli_z();
  CHECK(max_abs(jordan_product(x, y).matrix()) <= 1e-15);
  CHECK(max_abs(lie_product(x, y).matrix() - 2.0 * z.matrix()) <= 1e-15);
}

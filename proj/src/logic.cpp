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

#include "hv/logic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hv {

namespace {

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

bool is_trivial(const HermitianOperator &e) {
  const int n = e.dim();
  return max_abs(e.matrix()) <= kCommuteTol ||
         max_abs(e.matrix() - ComplexMatrix::Identity(n, n)) <= kCommuteTol;
}

ComplexMatrix sym_product(const ComplexMatrix &a, const ComplexMatrix &b) {
  const ComplexMatrix ab = a * b;
  return (ab + ab.adjoint()) / 2.0;
}

/// A random pair of complex-orthogonal sphere states; psi is drawn from the
/// orthogonal complement of phi.
std::pair<StateVector, StateVector> random_orthogonal_pair(int n,
                                                           std::mt19937_64 &rng) {
  const ComplexVector a = random_state(n, rng).as_complex();
  ComplexVector b = random_state(n, rng).as_complex();
  b -= a * (a.dot(b) / a.squaredNorm());
  return {StateVector::from_complex(a), StateVector::from_complex(b)};
}

/// Splits a random vector into its E and (I - E) parts; nullopt when one part
/// vanishes.
std::optional<std::pair<StateVector, StateVector>> split_by(
    const ComplexMatrix &e, std::mt19937_64 &rng) {
  const int n = static_cast<int>(e.rows());
  const ComplexVector v = random_state(n, rng).as_complex();
  const ComplexVector in = e * v;
  const ComplexVector out = v - in;
  if (in.norm() < 1e-6 || out.norm() < 1e-6) return std::nullopt;
  return std::make_pair(StateVector::from_complex(in),
                        StateVector::from_complex(out));
}

}  // namespace

double commutator_norm(const HermitianOperator &a, const HermitianOperator &b) {
  const ComplexMatrix ab = a.matrix() * b.matrix();
  return max_abs(ab - ab.adjoint());
}

double intersection_measure(const Proposition &l, const Proposition &m,
                            const StateVector &phi) {
  return l.orbit_arc(phi).intersect(m.orbit_arc(phi)).measure();
}

// ---------------------------------------------------------------------------
// compatible

Compatibility compatible(const Proposition &l, const Proposition &m, int budget,
                         std::uint64_t seed) {
  if (!(l.gauge() == m.gauge())) {
    throw GaugeMismatch(l.gauge().id() + " vs " + m.gauge().id());
  }
  const HermitianOperator &e = l.projector();
  const HermitianOperator &f = m.projector();
  if (e.dim() != f.dim()) throw DimensionMismatch("compatible");
  const int n = e.dim();

  Compatibility out{false, commutator_norm(e, f), std::nullopt, BorelSet{},
                    BorelSet{}, std::nullopt};

  if (out.commutator <= kCommuteTol) {
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix ne = id - e.matrix();
    const ComplexMatrix nf = id - f.matrix();
    const ComplexMatrix cells[4] = {
        sym_product(e.matrix(), f.matrix()), sym_product(e.matrix(), nf),
        sym_product(ne, f.matrix()), sym_product(ne, nf)};
    // Cell k gets eigenvalue k + 1; L collects cells {1, 2}, M cells {1, 3}.
    std::vector<double> values;
    std::vector<ComplexMatrix> parts;
    std::vector<double> in_l;
    std::vector<double> in_m;
    for (int k = 0; k < 4; ++k) {
      if (cells[k].trace().real() < 0.5) continue;
      values.push_back(k + 1.0);
      parts.push_back(cells[k]);
      if (k == 0 || k == 1) in_l.push_back(k + 1.0);
      if (k == 0 || k == 2) in_m.push_back(k + 1.0);
    }
    HiddenObservable joint(SpectralDecomposition(values, parts), l.gauge());
    out.first = BorelSet::points(in_l);
    out.second = BorelSet::points(in_m);
    const double err_l =
        max_abs(preimage_proposition(joint, out.first).projector().matrix() -
                e.matrix());
    const double err_m =
        max_abs(preimage_proposition(joint, out.second).projector().matrix() -
                f.matrix());
    out.compatible = err_l <= 1e-9 && err_m <= 1e-9;
    out.joint = std::move(joint);
    return out;
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::optional<std::pair<StateVector, StateVector>> path;
    switch (attempt % 3) {
      case 0:
        path = split_by(e.matrix(), rng);
        break;
      case 1:
        path = split_by(f.matrix(), rng);
        break;
      default:
        path = random_orthogonal_pair(n, rng);
    }
    if (!path) continue;
    const auto &[phi, psi] = *path;
    const FormFit fit = form_fit(phi, psi, [&](double t) {
      return intersection_measure(l, m, superposition(phi, psi, t));
    });
    if (!out.witness || fit.residual > out.witness->fit.residual) {
      out.witness = SuperpositionWitness{phi, psi, fit};
    }
    if (fit.residual > 10.0 * kFormFitRejectThreshold) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// boolean_morphism_check

PropositionFamily PropositionFamily::from_observable(
    const HiddenObservable &f, const std::vector<BorelSet> &sets) {
  PropositionFamily fam{{}, Provenance::kSingleSpectralFamily};
  for (const BorelSet &b : sets) fam.members.push_back(preimage_proposition(f, b));
  return fam;
}

PropositionFamily PropositionFamily::from_partition(
    std::vector<Proposition> cells) {
  return {std::move(cells), Provenance::kSingleSpectralFamily};
}

BooleanMorphismReport boolean_morphism_check(const PropositionFamily &family,
                                             int states, std::uint64_t seed) {
  if (family.provenance != PropositionFamily::Provenance::kSingleSpectralFamily) {
    throw IncompatibleFamily("family is not drawn from one spectral family");
  }
  const auto &props = family.members;
  if (props.empty()) throw IncompatibleFamily("empty family");
  const int n = props.front().projector().dim();
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (!(props[i].gauge() == props.front().gauge())) {
      throw IncompatibleFamily("members use different gauges");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (commutator_norm(props[i].projector(), props[j].projector()) >
          kCommuteTol) {
        throw IncompatibleFamily("members have non-commuting projectors");
      }
    }
  }

  // Greedy mutually orthogonal sub-list for the additivity check.
  std::vector<std::size_t> disjoint;
  for (std::size_t i = 0; i < props.size(); ++i) {
    bool orth = true;
    for (std::size_t j : disjoint) {
      orth = orth && max_abs(props[i].projector().matrix() *
                             props[j].projector().matrix()) <= 1e-9;
    }
    if (orth) disjoint.push_back(i);
  }
  ComplexMatrix disjoint_sum = ComplexMatrix::Zero(n, n);
  for (std::size_t i : disjoint) disjoint_sum += props[i].projector().matrix();

  BooleanMorphismReport rep{states, 0, 0.0, 0.0, 0.0, 0.0, 0, 0.0,
                            static_cast<int>(disjoint.size()), false};
  std::mt19937_64 rng(seed);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  for (int s = 0; s < states; ++s) {
    const StateVector phi = random_state(n, rng);
    std::vector<ArcSet> arcs;
    for (const Proposition &p : props) arcs.push_back(p.orbit_arc(phi));
    for (std::size_t i = 0; i < props.size(); ++i) {
      const ComplexMatrix &ei = props[i].projector().matrix();
      rep.max_complement_error =
          std::max(rep.max_complement_error,
                   std::abs(arcs[i].complement().measure() - expect(id - ei, phi)));
      for (std::size_t j = 0; j < props.size(); ++j) {
        if (j == i) continue;
        const ComplexMatrix &ej = props[j].projector().matrix();
        const ComplexMatrix meet = sym_product(ei, ej);
        if (j > i) {
          if (s == 0) ++rep.pairs;
          rep.max_intersection_error =
              std::max(rep.max_intersection_error,
                       std::abs(arcs[i].intersect(arcs[j]).measure() -
                                expect(meet, phi)));
          rep.max_union_error = std::max(
              rep.max_union_error, std::abs(arcs[i].unite(arcs[j]).measure() -
                                            expect(ei + ej - meet, phi)));
        }
        // eps(L_i) <= eps(L_j)
        if (max_abs(ej * ei - ei) <= 1e-9) {
          if (s == 0) ++rep.nested_pairs;
          rep.max_difference_error =
              std::max(rep.max_difference_error,
                       std::abs(arcs[j].minus(arcs[i]).measure() -
                                expect(ej - ei, phi)));
        }
      }
    }
    ArcSet joined;
    for (std::size_t i : disjoint) joined = joined.unite(arcs[i]);
    rep.max_additivity_error = std::max(
        rep.max_additivity_error,
        std::abs(joined.measure() - expect(disjoint_sum, phi)));
  }
  rep.pass = rep.max_intersection_error <= kMorphismTol &&
             rep.max_union_error <= kMorphismTol &&
             rep.max_complement_error <= kMorphismTol &&
             rep.max_difference_error <= kMorphismTol &&
             rep.max_additivity_error <= kMorphismTol;
  return rep;
}

// ---------------------------------------------------------------------------
// independence_scan

IndependenceResult independence_scan(const HermitianOperator &e,
                                     const HermitianOperator &f, int trials,
                                     std::uint64_t seed) {
  if (e.dim() != f.dim()) throw DimensionMismatch("independence_scan");
  const int n = e.dim();
  if (is_trivial(e) || is_trivial(f)) {
    return {IndependenceVerdict::kBanal,
            HermitianOperator(sym_product(e.matrix(), f.matrix())), 0.0, 0, -1};
  }

  const int samples = std::max(trials, 2 * n * n);
  const int features = n * n;
  Eigen::MatrixXd design(samples, features);
  RealVector target(samples);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const StateVector phi = random_state(n, rng);
    const ComplexVector psi = phi.unit_complex();
    int col = 0;
    for (int a = 0; a < n; ++a) design(s, col++) = std::norm(psi[a]);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const Complex c = std::conj(psi[a]) * psi[b];
        design(s, col++) = 2.0 * c.real();
        design(s, col++) = -2.0 * c.imag();
      }
    }
    target[s] = expect(e, phi) * expect(f, phi);
  }
  const RealVector coef = design.colPivHouseholderQr().solve(target);

  ComplexMatrix g = ComplexMatrix::Zero(n, n);
  int col = 0;
  for (int a = 0; a < n; ++a) g(a, a) = coef[col++];
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      g(a, b) = Complex(coef[col], coef[col + 1]);
      g(b, a) = std::conj(g(a, b));
      col += 2;
    }
  }
  const RealVector resid = (design * coef - target).cwiseAbs();
  Eigen::Index worst = 0;
  const double residual = resid.maxCoeff(&worst);
  return {residual > kIndependenceResidual ? IndependenceVerdict::kNoG
                                           : IndependenceVerdict::kGFits,
          HermitianOperator(g), residual, samples, static_cast<int>(worst)};
}

// ---------------------------------------------------------------------------
// contextuality_witness

std::optional<ContextualityWitness> contextuality_witness(
    const HermitianOperator &e, const GaugeSection &sigma, const Context &first,
    const Context &second, const std::vector<StateVector> &candidate_rays,
    int budget) {
  constexpr int kPhases = 16;
  const Proposition l1 = proposition_of(e, sigma, first);
  const Proposition l2 = proposition_of(e, sigma, second);
  int index = 0;
  for (const StateVector &ray : candidate_rays) {
    const double p = expect(e, ray);
    if (p <= 1e-9 || p >= 1.0 - 1e-9) {
      index += kPhases;
      continue;
    }
    const StateVector base = sigma(ray);
    for (int j = 0; j < kPhases; ++j, ++index) {
      if (index >= budget) return std::nullopt;
      const double u = -kPi + (j + 0.5) * kTwoPi / kPhases;
      const StateVector phi = rotate(base, u);
      const bool v1 = member(l1, phi);
      const bool v2 = member(l2, phi);
      if (v1 != v2) return ContextualityWitness{phi, u, v1, v2, index};
    }
    if (index >= budget) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<ContextualityWitness> contextuality_witness(
    const HermitianOperator &e, const GaugeSection &sigma, const Context &first,
    const Context &second, int budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<StateVector> rays;
  const int ray_count = std::max(1, (budget + 15) / 16);
  for (int r = 0; r < ray_count; ++r) rays.push_back(random_state(e.dim(), rng));
  return contextuality_witness(e, sigma, first, second, rays, budget);
}

// ---------------------------------------------------------------------------
// frame_function_demo

FrameFunctionReport frame_function_demo(const StateVector &phi0,
                                        const std::vector<Basis> &bases,
                                        const GaugeSection &sigma,
                                        const Context &nu) {
  const int n = phi0.complex_dim();
  if (n < 3) throw NeedsDimensionThree("complex dimension " + std::to_string(n));

  FrameFunctionReport rep;
  rep.weights_exact = true;
  rep.shared_pairs = 0;
  std::vector<std::vector<bool>> values;
  for (const Basis &basis : bases) {
    if (static_cast<int>(basis.size()) != n) {
      throw NotAResolution("basis must have n vectors");
    }
    std::vector<HermitianOperator> projectors;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].size() != n || std::abs(basis[i].norm() - 1.0) > 1e-9) {
        throw NotAResolution("basis vectors must be unit vectors");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (std::abs(basis[j].dot(basis[i])) > 1e-9) {
          throw NotAResolution("basis vectors must be orthogonal");
        }
      }
      projectors.push_back(HermitianOperator::ray_projector(basis[i]));
    }
    const std::vector<Proposition> cells = partition_of(projectors, sigma, nu);
    std::vector<bool> g;
    int weight = 0;
    int chosen = -1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      g.push_back(member(cells[i], phi0));
      if (g.back()) {
        ++weight;
        if (chosen < 0) chosen = static_cast<int>(i);
      }
    }
    rep.chosen.push_back(chosen);
    rep.weights.push_back(weight);
    rep.weights_exact = rep.weights_exact && weight == 1;
    values.push_back(std::move(g));
  }

  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (std::abs(std::abs(bases[a][i].dot(bases[b][j])) - 1.0) > 1e-9) {
            continue;
          }
          ++rep.shared_pairs;
          if (!rep.disagreement && values[a][i] != values[b][j]) {
            rep.disagreement = FrameFunctionReport::Disagreement{
                static_cast<int>(a), i, static_cast<int>(b), j, values[a][i],
                values[b][j]};
          }
        }
      }
    }
  }
  if (rep.shared_pairs == 0) {
    throw NoSharedVector("no two bases share a unit vector");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// factorize

double Factorization::apply(double x) const {
  for (const auto &[from, to] : map) {
    if (from == x) return to;
  }
  throw std::out_of_range("factorization map is defined on spec(f) only");
}

Factorization factorize(const HiddenObservable &g, const HiddenObservable &f,
                        int samples, std::uint64_t seed) {
  if (!(g.gauge() == f.gauge()) || !(g.context() == f.context())) {
    throw GaugeMismatch("factorize needs a shared gauge and context");
  }
  const SpectralDecomposition &df = f.decomposition();
  const SpectralDecomposition &dg = g.decomposition();
  if (df.dim() != dg.dim()) throw DimensionMismatch("factorize");

  Factorization out{false, {}, std::nullopt};
  std::vector<int> owner(df.size(), -1);
  for (std::size_t j = 0; j < dg.size(); ++j) {
    const ComplexMatrix &pj = dg.projectors()[j];
    ComplexMatrix sum = ComplexMatrix::Zero(df.dim(), df.dim());
    for (std::size_t i = 0; i < df.size(); ++i) {
      const ComplexMatrix &ei = df.projectors()[i];
      if (max_abs(pj * ei - ei) <= 1e-9) {
        owner[i] = static_cast<int>(j);
        sum += ei;
      }
    }
    if (max_abs(sum - pj) > 1e-9) {
      out.separator = HermitianOperator(pj);
      return out;
    }
  }
  for (std::size_t i = 0; i < df.size(); ++i) {
    if (owner[i] < 0) {
      out.separator = HermitianOperator(df.projectors()[i]);
      return out;
    }
    out.map.emplace_back(df.eigenvalues()[i], dg.eigenvalues()[owner[i]]);
  }
  out.nested = true;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const StateVector phi = random_state(df.dim(), rng);
    ++out.pointwise_checked;
    if (hidden_value(g, phi) == out.apply(hidden_value(f, phi))) {
      ++out.pointwise_agree;
    }
  }
  return out;
}

}  // namespace hv

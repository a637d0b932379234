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

#include "hv/hidden.hpp"

#include <algorithm>
#include <cmath>

namespace hv {

namespace {

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

void require_projector(const HermitianOperator &e) {
  if (!e.is_projector()) throw NotProjector("E^2 != E within 1e-9");
}

/// The decomposition grouping base cells by value.
SpectralDecomposition group_by_value(const SpectralDecomposition &base,
                                     const std::vector<double> &values) {
  const std::vector<double> &eig = base.eigenvalues();
  return borel_transform(base, [&](double x) {
    const auto it = std::find(eig.begin(), eig.end(), x);
    return values[static_cast<std::size_t>(it - eig.begin())];
  });
}

}  // namespace

double gauge_phase(const StateVector &phi, const GaugeSection &sigma) {
  return arg_rel(phi, sigma(phi));
}

// ---------------------------------------------------------------------------
// Proposition

Proposition::Proposition(HermitianOperator projector, GaugeSection gauge,
                         Context context, ArcRule rule, std::string description)
    : projector_(std::move(projector)),
      gauge_(std::move(gauge)),
      context_(std::move(context)),
      rule_(std::move(rule)),
      description_(std::move(description)) {}

ArcSet Proposition::canonical_arc(const StateVector &phi) const {
  return rule_(gauge_(phi));
}

ArcSet Proposition::orbit_arc(const StateVector &phi) const {
  const ArcSet arc = canonical_arc(phi);
  if (context_.is_identity()) return arc;
  return context_.image(arc, pivot_section(phi));
}

double Proposition::orbit_measure(const StateVector &phi) const {
  return orbit_arc(phi).measure();
}

Proposition proposition_of(const HermitianOperator &e,
                           const GaugeSection &sigma, const Context &nu) {
  require_projector(e);
  const ComplexMatrix m = e.matrix();
  auto rule = [m](const StateVector &s) {
    const double p = clamp01(expect(m, s));
    if (p <= 0.0) return ArcSet::empty();
    if (p >= 1.0) return ArcSet::full();
    return ArcSet::between(kPi - kTwoPi * p, kPi);
  };
  return Proposition(e, sigma, nu, rule, "top-arc");
}

bool member(const Proposition &l, const StateVector &phi) {
  const StateVector s = l.gauge()(phi);
  double u = arg_rel(phi, s);
  if (!l.context().is_identity()) {
    u = l.context().inverse(u, pivot_section(phi));
  }
  return l.canonical_arc(s).contains(u);
}

Proposition apply_context(const Proposition &l, const Context &nu) {
  Proposition out = l;
  out.context_ = l.context_.then(nu);
  return out;
}

Proposition complement(const Proposition &l) {
  Proposition out = l;
  const int n = l.projector_.dim();
  out.projector_ = HermitianOperator::identity(n) - l.projector_;
  auto inner = l.rule_;
  out.rule_ = [inner](const StateVector &s) { return inner(s).complement(); };
  out.description_ = "complement(" + l.description_ + ")";
  return out;
}

std::vector<Proposition> partition_of(
    const std::vector<HermitianOperator> &projectors,
    const GaugeSection &sigma, const Context &nu) {
  if (projectors.empty()) throw NotAResolution("empty family");
  const int n = projectors.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    if (projectors[i].dim() != n) throw DimensionMismatch("partition_of");
    if (!projectors[i].is_projector()) {
      throw NotAResolution("member " + std::to_string(i) + " is not a projector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double off =
          (projectors[i].matrix() * projectors[j].matrix()).cwiseAbs().maxCoeff();
      if (off > 1e-9) throw NotAResolution("members are not orthogonal");
    }
    sum += projectors[i].matrix();
  }
  if ((sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9) {
    throw NotAResolution("projectors do not sum to the identity");
  }

  std::vector<ComplexMatrix> mats;
  for (const auto &p : projectors) mats.push_back(p.matrix());
  const std::size_t k = projectors.size();

  std::vector<Proposition> out;
  for (std::size_t cell = 0; cell < k; ++cell) {
    auto rule = [mats, cell, k](const StateVector &s) {
      // Every cell recomputes the same partial sums, so shared endpoints are
      // bitwise equal across cells.
      double below = 0.0;
      for (std::size_t j = 0; j < cell; ++j) below += clamp01(expect(mats[j], s));
      below = clamp01(below);
      const double upper = kPi - kTwoPi * below;
      const double lower =
          cell + 1 == k
              ? -kPi
              : kPi - kTwoPi * clamp01(below + clamp01(expect(mats[cell], s)));
      return ArcSet::between(lower, upper);
    };
    out.emplace_back(projectors[cell], sigma, nu, rule,
                     "partition-cell-" + std::to_string(cell));
  }
  return out;
}

std::pair<Proposition, Proposition> product_pair(const HermitianOperator &e,
                                                 const HermitianOperator &f,
                                                 const GaugeSection &sigma) {
  require_projector(e);
  require_projector(f);
  const ComplexMatrix me = e.matrix();
  const ComplexMatrix mf = f.matrix();
  auto l_rule = [me](const StateVector &s) {
    const double pe = clamp01(expect(me, s));
    return ArcSet::between(kPi * (1.0 - 2.0 * pe), kPi);
  };
  auto m_rule = [me, mf](const StateVector &s) {
    const double pe = clamp01(expect(me, s));
    const double pf = clamp01(expect(mf, s));
    return ArcSet::between(kPi * (-2.0 * pe - 2.0 * pf + 2.0 * pe * pf + 1.0),
                           kPi * (-2.0 * pe + 2.0 * pe * pf + 1.0));
  };
  return {Proposition(e, sigma, {}, l_rule, "product-pair-L"),
          Proposition(f, sigma, {}, m_rule, "product-pair-M")};
}

// ---------------------------------------------------------------------------
// HiddenObservable

HiddenObservable::HiddenObservable(SpectralDecomposition base,
                                   GaugeSection gauge, Context context)
    : HiddenObservable(base, base.eigenvalues(), std::move(gauge),
                       std::move(context)) {}

HiddenObservable::HiddenObservable(const HermitianOperator &t,
                                   GaugeSection gauge, Context context)
    : HiddenObservable(spectral_decompose(t), std::move(gauge),
                       std::move(context)) {}

HiddenObservable::HiddenObservable(SpectralDecomposition base,
                                   std::vector<double> values,
                                   GaugeSection gauge, Context context)
    : base_(std::move(base)),
      values_(std::move(values)),
      gauge_(std::move(gauge)),
      context_(std::move(context)),
      operator_(group_by_value(base_, values_)) {
  // Snap each cell value onto the merged eigenvalue of its group so that
  // hidden values are always exact members of the spectrum.
  const std::vector<double> &spec = operator_.eigenvalues();
  for (double &v : values_) {
    const auto it = std::min_element(
        spec.begin(), spec.end(),
        [v](double a, double b) { return std::abs(a - v) < std::abs(b - v); });
    v = *it;
  }
}

HiddenObservable HiddenObservable::compose(
    const std::function<double(double)> &b) const {
  std::vector<double> mapped;
  mapped.reserve(values_.size());
  for (double v : values_) mapped.push_back(b(v));
  return HiddenObservable(base_, std::move(mapped), gauge_, context_);
}

HiddenObservable HiddenObservable::with_context(const Context &nu) const {
  return HiddenObservable(base_, values_, gauge_, nu);
}

std::vector<double> HiddenObservable::cell_uppers(
    const StateVector &phi) const {
  return cell_uppers_at(gauge_(phi));
}

std::vector<double> HiddenObservable::cell_uppers_at(
    const StateVector &gauge_point) const {
  const std::vector<double> w = base_.weights(gauge_point);
  std::vector<double> uppers(w.size());
  double running = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    running = clamp01(running + w[i]);
    uppers[i] = i + 1 == w.size() ? kPi : kTwoPi * running - kPi;
  }
  return uppers;
}

std::vector<ArcSet> HiddenObservable::canonical_cells(
    const StateVector &phi) const {
  return canonical_cells_at(gauge_(phi));
}

std::vector<ArcSet> HiddenObservable::canonical_cells_at(
    const StateVector &gauge_point) const {
  const std::vector<double> uppers = cell_uppers_at(gauge_point);
  std::vector<ArcSet> cells;
  double lower = -kPi;
  for (double upper : uppers) {
    cells.push_back(ArcSet::between(lower, upper));
    lower = std::max(lower, upper);
  }
  return cells;
}

std::vector<ArcSet> HiddenObservable::orbit_cells(
    const StateVector &phi) const {
  std::vector<ArcSet> cells = canonical_cells(phi);
  if (context_.is_identity()) return cells;
  const StateVector canonical = pivot_section(phi);
  for (ArcSet &c : cells) c = context_.image(c, canonical);
  return cells;
}

double hidden_value(const HiddenObservable &f, const StateVector &phi) {
  const StateVector s = f.gauge()(phi);
  double u = arg_rel(phi, s);
  if (!f.context().is_identity()) {
    u = f.context().inverse(u, pivot_section(phi));
  }
  const std::vector<double> uppers = f.cell_uppers_at(s);
  for (std::size_t i = 0; i < uppers.size(); ++i) {
    if (u <= uppers[i]) return f.values()[i];
  }
  return f.values().back();
}

std::vector<double> essential_image(const HiddenObservable &f) {
  return f.decomposition().eigenvalues();
}

Proposition preimage_proposition(const HiddenObservable &f, const BorelSet &b) {
  std::vector<bool> selected;
  const int n = f.base().dim();
  ComplexMatrix proj = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    selected.push_back(b.contains(f.values()[i]));
    if (selected.back()) proj += f.base().projectors()[i];
  }
  HiddenObservable g = f.with_context({});
  auto rule = [g, selected](const StateVector &s) {
    const std::vector<ArcSet> cells = g.canonical_cells_at(s);
    std::vector<ArcSet::Piece> pieces;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!selected[i]) continue;
      for (const auto &p : cells[i].pieces()) pieces.push_back(p);
    }
    return ArcSet::from_pieces(std::move(pieces));
  };
  return Proposition(HermitianOperator(proj), f.gauge(), f.context(), rule,
                     "preimage");
}

}  // namespace hv

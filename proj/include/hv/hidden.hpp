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

#ifndef HV_HIDDEN_HPP
#define HV_HIDDEN_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hv/arcs.hpp"
#include "hv/context.hpp"
#include "hv/operators.hpp"
#include "hv/realspace.hpp"

namespace hv {

/// Angular coordinate of phi on its orbit, measured from the gauge point:
/// arg_rel(phi, sigma[phi]).
double gauge_phase(const StateVector &phi, const GaugeSection &sigma);

/// A hidden yes/no property of classical states.
///
/// A proposition is stored intensionally: the projector it corresponds to,
/// the gauge, the context, and a rule producing the canonical arc of every
/// orbit from the gauge point sigma[phi]. The membership arc on the orbit is
/// the context image of the canonical arc, in the coordinate gauge_phase.
class Proposition {
 public:
  using ArcRule = std::function<ArcSet(const StateVector &gauge_point)>;

  Proposition(HermitianOperator projector, GaugeSection gauge, Context context,
              ArcRule rule, std::string description);

  const HermitianOperator &projector() const { return projector_; }
  const GaugeSection &gauge() const { return gauge_; }
  const Context &context() const { return context_; }
  const std::string &description() const { return description_; }

  /// The arc before the context is applied.
  ArcSet canonical_arc(const StateVector &phi) const;
  /// The membership arc of the orbit of phi.
  ArcSet orbit_arc(const StateVector &phi) const;
  /// Normalized length of orbit_arc; equals <projector>_phi.
  double orbit_measure(const StateVector &phi) const;

 private:
  friend Proposition apply_context(const Proposition &, const Context &);
  friend Proposition complement(const Proposition &);

  HermitianOperator projector_;
  GaugeSection gauge_;
  Context context_;
  ArcRule rule_;
  std::string description_;
};

/// The arc (pi - 2 pi <E>_phi, pi] on every orbit, moved by nu.
Proposition proposition_of(const HermitianOperator &e,
                           const GaugeSection &sigma = {},
                           const Context &nu = {});

/// Truth value of L at the hidden state phi.
bool member(const Proposition &l, const StateVector &phi);

/// Same projector and gauge, membership arcs mapped through nu.
Proposition apply_context(const Proposition &l, const Context &nu);

/// The complementary arc with projector I - E.
Proposition complement(const Proposition &l);

/// Stacked arcs (pi - 2 pi S_k, pi - 2 pi S_{k-1}], S_k = sum_{j<=k} <E_j>.
/// Throws NotAResolution unless the projectors are pairwise orthogonal and
/// sum to the identity within 1e-9.
std::vector<Proposition> partition_of(
    const std::vector<HermitianOperator> &projectors,
    const GaugeSection &sigma = {}, const Context &nu = {});

/// Two propositions for E and F whose intersection has orbit measure
/// <E>_phi <F>_phi on every orbit.
std::pair<Proposition, Proposition> product_pair(const HermitianOperator &e,
                                                 const HermitianOperator &f,
                                                 const GaugeSection &sigma = {});

/// A deterministic classical observable: the spectral quantile function.
///
/// The orbit of phi is cut into consecutive cells, cell i being the arc
/// (2 pi F_{i-1} - pi, 2 pi F_i - pi] where F_i = sum_{k<=i} <E_k>_phi over
/// the base decomposition. The value on cell i is values()[i]. Built from an
/// operator the values are its eigenvalues; compose() replaces them by b of
/// them, which is how b o f is represented.
class HiddenObservable {
 public:
  explicit HiddenObservable(SpectralDecomposition base,
                            GaugeSection gauge = {}, Context context = {});
  explicit HiddenObservable(const HermitianOperator &t,
                            GaugeSection gauge = {}, Context context = {});

  const SpectralDecomposition &base() const { return base_; }
  const std::vector<double> &values() const { return values_; }
  const GaugeSection &gauge() const { return gauge_; }
  const Context &context() const { return context_; }

  /// The decomposition of the associated operator (cells with equal values
  /// merged).
  const SpectralDecomposition &decomposition() const { return operator_; }
  HermitianOperator op() const { return operator_.reconstruct(); }

  /// b o f, with the same cells.
  HiddenObservable compose(const std::function<double(double)> &b) const;
  HiddenObservable with_context(const Context &nu) const;

  /// Upper endpoints 2 pi F_i - pi of the canonical cells for the orbit of
  /// phi; the last one is exactly pi.
  std::vector<double> cell_uppers(const StateVector &phi) const;
  /// Same, from a point already produced by the gauge.
  std::vector<double> cell_uppers_at(const StateVector &gauge_point) const;
  /// Canonical cell arcs (before the context).
  std::vector<ArcSet> canonical_cells(const StateVector &phi) const;
  std::vector<ArcSet> canonical_cells_at(const StateVector &gauge_point) const;
  /// Cell arcs on the orbit, context applied.
  std::vector<ArcSet> orbit_cells(const StateVector &phi) const;

 private:
  HiddenObservable(SpectralDecomposition base, std::vector<double> values,
                   GaugeSection gauge, Context context);

  SpectralDecomposition base_;
  std::vector<double> values_;
  GaugeSection gauge_;
  Context context_;
  SpectralDecomposition operator_;
};

/// f(phi): the value of the cell containing nu^{-1}(gauge_phase(phi)).
double hidden_value(const HiddenObservable &f, const StateVector &phi);

/// The spectrum of the operator of f, ascending.
std::vector<double> essential_image(const HiddenObservable &f);

/// f^{-1}(B) as a proposition: the union of the cells whose value is in B.
Proposition preimage_proposition(const HiddenObservable &f, const BorelSet &b);

}  // namespace hv

#endif  // HV_HIDDEN_HPP

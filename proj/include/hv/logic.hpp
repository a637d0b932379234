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

#ifndef HV_LOGIC_HPP
#define HV_LOGIC_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hv/hidden.hpp"
#include "hv/measure.hpp"

namespace hv {

/// Commutators below this count as zero.
inline constexpr double kCommuteTol = 1e-10;

double commutator_norm(const HermitianOperator &a, const HermitianOperator &b);

/// The measure of L intersected with M on the orbit of phi.
double intersection_measure(const Proposition &l, const Proposition &m,
                            const StateVector &phi);

struct SuperpositionWitness {
  StateVector phi;
  StateVector psi;
  FormFit fit;
};

struct Compatibility {
  bool compatible;
  double commutator;
  /// On success: an observable f with L ~ f^{-1}(first), M ~ f^{-1}(second).
  std::optional<HiddenObservable> joint;
  BorelSet first;
  BorelSet second;
  /// On failure: a superposition path along which the measure of L and M
  /// together is not of the proposition form.
  std::optional<SuperpositionWitness> witness;
};

/// Decides compatibility by projector commutation; builds the joint
/// observable from the common refinement {EF, E(I-F), (I-E)F, (I-E)(I-F)}
/// when they commute, otherwise searches `budget` superposition paths
/// (deterministically from `seed`) for a form_fit failure of the intersection
/// measure. Throws GaugeMismatch when L and M use different gauges.
Compatibility compatible(const Proposition &l, const Proposition &m,
                         int budget = 64, std::uint64_t seed = 0);

/// Propositions sharing one gauge.
struct PropositionFamily {
  enum class Provenance { kSingleSpectralFamily, kAdHoc };

  std::vector<Proposition> members;
  Provenance provenance;

  static PropositionFamily from_observable(const HiddenObservable &f,
                                           const std::vector<BorelSet> &sets);
  static PropositionFamily from_partition(std::vector<Proposition> cells);
};

struct BooleanMorphismReport {
  int states;
  int pairs;
  double max_intersection_error;
  double max_union_error;
  double max_complement_error;
  /// Over pairs with eps(L) <= eps(M): measure(M \ L) vs <eps(M) - eps(L)>.
  double max_difference_error;
  int nested_pairs;
  /// Over greedily chosen mutually orthogonal members: measure of the union
  /// vs <sum of projectors>.
  double max_additivity_error;
  int disjoint_members;
  bool pass;
};

inline constexpr double kMorphismTol = 1e-12;

/// Checks on `states` random states that arc operations inside the family
/// match projector operations. Throws IncompatibleFamily unless the family
/// comes from one spectral family with commuting projectors.
BooleanMorphismReport boolean_morphism_check(const PropositionFamily &family,
                                             int states = 100,
                                             std::uint64_t seed = 0);

enum class IndependenceVerdict { kBanal, kNoG, kGFits };

struct IndependenceResult {
  IndependenceVerdict verdict;
  /// Best-fit G (exact E F in the banal case).
  HermitianOperator g;
  /// Largest |<G>_phi - <E>_phi <F>_phi| over the sample states.
  double residual;
  int samples;
  int worst_sample;
};

inline constexpr double kIndependenceResidual = 1e-6;

/// BANAL if E or F is 0 or I; otherwise fits a Hermitian G to the products
/// <E><F> over max(trials, 2 n^2) random states by least squares and reports
/// NO_G when the residual exceeds 1e-6.
IndependenceResult independence_scan(const HermitianOperator &e,
                                     const HermitianOperator &f, int trials,
                                     std::uint64_t seed = 0);

struct ContextualityWitness {
  StateVector state;
  double phase;
  bool value_first;
  bool value_second;
  int sample_index;
};

/// Searches hidden states on `candidate_rays` (phases on a 16-point grid per
/// ray) for one where the two contexts give different truth values to the
/// proposition of E. Rays with <E> in {0, 1} are skipped. Returns nullopt
/// when the budget runs out.
std::optional<ContextualityWitness> contextuality_witness(
    const HermitianOperator &e, const GaugeSection &sigma, const Context &first,
    const Context &second, const std::vector<StateVector> &candidate_rays,
    int budget);

/// Same, drawing candidate rays from a seeded generator.
std::optional<ContextualityWitness> contextuality_witness(
    const HermitianOperator &e, const GaugeSection &sigma, const Context &first,
    const Context &second, int budget, std::uint64_t seed = 0);

struct FrameFunctionReport {
  /// Per basis, the index of the cell containing phi0.
  std::vector<int> chosen;
  /// Per basis, the number of cells containing phi0 (always exactly 1).
  std::vector<int> weights;
  bool weights_exact;
  int shared_pairs;
  struct Disagreement {
    int basis_a;
    int vector_a;
    int basis_b;
    int vector_b;
    bool value_a;
    bool value_b;
  };
  std::optional<Disagreement> disagreement;
};

using Basis = std::vector<ComplexVector>;

/// Evaluates the frame function G_B(u) = [phi0 lies in the partition cell of
/// u] for each basis, and looks for a vector shared by two bases whose value
/// differs between them. Throws NeedsDimensionThree for n < 3, NotAResolution
/// for a non-orthonormal basis and NoSharedVector when no two bases share a
/// vector.
FrameFunctionReport frame_function_demo(const StateVector &phi0,
                                        const std::vector<Basis> &bases,
                                        const GaugeSection &sigma = {},
                                        const Context &nu = {});

struct Factorization {
  bool nested;
  /// Eigenvalue-level map b on spec(f) when nested.
  std::vector<std::pair<double, double>> map;
  /// A spectral projector of g that is not a sum of spectral projectors of f.
  std::optional<HermitianOperator> separator;
  int pointwise_checked = 0;
  int pointwise_agree = 0;

  double apply(double x) const;
};

/// g = b o f at the level of spectral projectors, plus a sampled pointwise
/// comparison hidden_value(g, .) vs b(hidden_value(f, .)).
Factorization factorize(const HiddenObservable &g, const HiddenObservable &f,
                        int samples = 1000, std::uint64_t seed = 0);

}  // namespace hv

#endif  // HV_LOGIC_HPP

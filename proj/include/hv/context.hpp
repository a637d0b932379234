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

#ifndef HV_CONTEXT_HPP
#define HV_CONTEXT_HPP

#include <functional>
#include <string>
#include <vector>

#include "hv/arcs.hpp"
#include "hv/realspace.hpp"

namespace hv {

/// A measure-preserving rearrangement of the phase circle of every orbit.
///
/// A context is a composition of elementary maps, each either
///   RIGID:    u -> wrap(u + c([phi])), or
///   EXCHANGE: an interval exchange of k equal bins of (-pi, pi], bin j
///             (-pi + j w, -pi + (j+1) w] translated onto bin perm[j].
/// Both may depend on the ray; they see the ray through its pivot
/// representative. Elementary maps are applied in insertion order.
class Context {
 public:
  using Offset = std::function<double(const StateVector &canonical)>;
  using Permutation =
      std::function<std::vector<int>(const StateVector &canonical)>;

  /// The identity context.
  Context() = default;

  static Context identity() { return {}; }
  static Context rigid(double offset);
  /// A deterministic pseudo-random offset in (-pi, pi] per ray, derived from
  /// the ray label.
  static Context rigid_per_ray_hash();
  static Context rigid(std::string id, Offset offset);
  static Context exchange(std::vector<int> perm);
  static Context exchange(std::string id, int bins, Permutation perm);

  /// nu after *this.
  Context then(const Context &nu) const;

  double forward(double u, const StateVector &canonical) const;
  double inverse(double u, const StateVector &canonical) const;
  ArcSet image(const ArcSet &arcs, const StateVector &canonical) const;

  bool is_identity() const { return maps_.empty(); }
  /// Human-readable id; two contexts with equal ids are the same map.
  std::string id() const;
  bool operator==(const Context &o) const { return id() == o.id(); }

 private:
  struct Elementary {
    enum class Kind { kRigid, kExchange } kind;
    std::string id;
    Offset offset;
    int bins = 0;
    Permutation perm;
  };

  std::vector<Elementary> maps_;

  static double forward_one(const Elementary &m, double u,
                            const StateVector &canonical);
  static double inverse_one(const Elementary &m, double u,
                            const StateVector &canonical);
  static ArcSet image_one(const Elementary &m, const ArcSet &arcs,
                          const StateVector &canonical);
};

}  // namespace hv

#endif  // HV_CONTEXT_HPP

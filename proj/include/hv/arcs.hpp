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

#ifndef HV_ARCS_HPP
#define HV_ARCS_HPP

#include <string>
#include <vector>

namespace hv {

/// A finite union of half-open arcs (lo, hi] of the circle (-pi, pi].
///
/// Pieces are stored sorted, pairwise disjoint and with touching pieces
/// merged, each satisfying -pi <= lo < hi <= pi. A wrapping arc is stored as
/// two pieces (lo, pi] and (-pi, hi]. All set operations work on the stored
/// endpoints only, so lengths add up without any quadrature.
class ArcSet {
 public:
  struct Piece {
    double lo;
    double hi;
  };

  ArcSet() = default;

  static ArcSet empty() { return {}; }
  static ArcSet full();
  /// (lo, hi] with -pi <= lo <= hi <= pi; empty when lo == hi.
  static ArcSet between(double lo, double hi);
  /// The arc of the given length starting (exclusive) at `start`, wrapped
  /// onto the circle. Lengths are clamped to [0, 2 pi].
  static ArcSet from_start(double start, double length);
  static ArcSet from_pieces(std::vector<Piece> pieces);

  const std::vector<Piece> &pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  bool is_full() const;

  /// Total angular length in [0, 2 pi].
  double length() const;
  /// length() / (2 pi).
  double measure() const;
  bool contains(double u) const;

  ArcSet complement() const;
  ArcSet intersect(const ArcSet &o) const;
  ArcSet unite(const ArcSet &o) const;
  ArcSet minus(const ArcSet &o) const;
  /// Rigid rotation u -> wrap(u + c).
  ArcSet rotated(double c) const;

  std::string to_string() const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace hv

#endif  // HV_ARCS_HPP

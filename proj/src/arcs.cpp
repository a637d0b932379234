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

#include "hv/arcs.hpp"

#include <algorithm>
#include <cstdio>

#include "hv/realspace.hpp"

namespace hv {

ArcSet ArcSet::full() { return between(-kPi, kPi); }

ArcSet ArcSet::between(double lo, double hi) {
  lo = std::clamp(lo, -kPi, kPi);
  hi = std::clamp(hi, -kPi, kPi);
  ArcSet out;
  if (lo < hi) out.pieces_.push_back({lo, hi});
  return out;
}

ArcSet ArcSet::from_start(double start, double length) {
  if (!(length > 0.0)) return {};
  if (length >= kTwoPi) return full();
  const double lo = wrap_angle(start);
  const double end = lo + length;
  std::vector<Piece> pieces;
  if (end <= kPi) {
    pieces.push_back({lo, end});
  } else {
    if (lo < kPi) pieces.push_back({lo, kPi});
    pieces.push_back({-kPi, std::min(end - kTwoPi, kPi)});
  }
  return from_pieces(std::move(pieces));
}

ArcSet ArcSet::from_pieces(std::vector<Piece> pieces) {
  std::vector<Piece> kept;
  for (Piece p : pieces) {
    p.lo = std::clamp(p.lo, -kPi, kPi);
    p.hi = std::clamp(p.hi, -kPi, kPi);
    if (p.lo < p.hi) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Piece &a, const Piece &b) { return a.lo < b.lo; });
  ArcSet out;
  for (const Piece &p : kept) {
    if (!out.pieces_.empty() && p.lo <= out.pieces_.back().hi) {
      out.pieces_.back().hi = std::max(out.pieces_.back().hi, p.hi);
    } else {
      out.pieces_.push_back(p);
    }
  }
  return out;
}

bool ArcSet::is_full() const {
  return pieces_.size() == 1 && pieces_[0].lo == -kPi && pieces_[0].hi == kPi;
}

double ArcSet::length() const {
  double total = 0.0;
  for (const Piece &p : pieces_) total += p.hi - p.lo;
  return total;
}

double ArcSet::measure() const { return length() / kTwoPi; }

bool ArcSet::contains(double u) const {
  for (const Piece &p : pieces_) {
    if (p.lo < u && u <= p.hi) return true;
  }
  return false;
}

ArcSet ArcSet::complement() const {
  std::vector<Piece> gaps;
  double cursor = -kPi;
  for (const Piece &p : pieces_) {
    if (cursor < p.lo) gaps.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < kPi) gaps.push_back({cursor, kPi});
  ArcSet out;
  out.pieces_ = std::move(gaps);
  return out;
}

ArcSet ArcSet::intersect(const ArcSet &o) const {
  std::vector<Piece> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pieces_.size() && j < o.pieces_.size()) {
    const Piece &a = pieces_[i];
    const Piece &b = o.pieces_[j];
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  ArcSet r;
  r.pieces_ = std::move(out);
  return r;
}

ArcSet ArcSet::unite(const ArcSet &o) const {
  std::vector<Piece> all = pieces_;
  all.insert(all.end(), o.pieces_.begin(), o.pieces_.end());
  return from_pieces(std::move(all));
}

ArcSet ArcSet::minus(const ArcSet &o) const {
  return intersect(o.complement());
}

ArcSet ArcSet::rotated(double c) const {
  if (is_full()) return *this;
  // Every endpoint goes through the same map, and -pi is the point pi, so
  // arcs sharing an endpoint still share it after the shift.
  auto shift = [c](double x) {
    const double r = wrap_angle((x == -kPi ? kPi : x) + c);
    return r == -kPi ? kPi : r;
  };
  std::vector<Piece> pieces;
  for (const Piece &p : pieces_) {
    const double lo = shift(p.lo);
    const double hi = shift(p.hi);
    if (lo < hi) {
      pieces.push_back({lo, hi});
    } else {
      pieces.push_back({lo, kPi});
      pieces.push_back({-kPi, hi});
    }
  }
  return from_pieces(std::move(pieces));
}

std::string ArcSet::to_string() const {
  if (pieces_.empty()) return "{}";
  std::string s;
  char buf[96];
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s(%.17g, %.17g]", i ? " U " : "",
                  pieces_[i].lo, pieces_[i].hi);
    s += buf;
  }
  return s;
}

}  // namespace hv

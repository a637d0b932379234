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

#include "hv/context.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hv {

namespace {

void check_permutation(const std::vector<int> &perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (sorted[j] != static_cast<int>(j)) {
      throw InvalidContext("exchange perm is not a permutation of 0..k-1");
    }
  }
  if (perm.empty()) throw InvalidContext("exchange needs at least one bin");
}

double bin_edge(int j, int bins) {
  if (j <= 0) return -kPi;
  if (j >= bins) return kPi;
  return -kPi + kTwoPi * j / bins;
}

int bin_of(double u, int bins) {
  int j = static_cast<int>(std::ceil((u + kPi) * bins / kTwoPi)) - 1;
  j = std::clamp(j, 0, bins - 1);
  // Bins are (edge_j, edge_{j+1}]; fix rounding at the edges.
  while (j > 0 && u <= bin_edge(j, bins)) --j;
  while (j < bins - 1 && u > bin_edge(j + 1, bins)) ++j;
  return j;
}

std::vector<int> invert(const std::vector<int> &perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = static_cast<int>(j);
  return inv;
}

}  // namespace

Context Context::rigid(double offset) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "rigid(%.17g)", offset);
  return rigid(buf, [offset](const StateVector &) { return offset; });
}

Context Context::rigid_per_ray_hash() {
  return rigid("rigid(per-ray-hash)", [](const StateVector &canonical) {
    const Ray ray(canonical);
    const double unit = static_cast<double>(ray.label() >> 11) * 0x1.0p-53;
    return wrap_angle(-kPi + kTwoPi * unit);
  });
}

Context Context::rigid(std::string id, Offset offset) {
  Context c;
  c.maps_.push_back({Elementary::Kind::kRigid, std::move(id), std::move(offset),
                     0, nullptr});
  return c;
}

Context Context::exchange(std::vector<int> perm) {
  check_permutation(perm);
  std::string id = "exchange(";
  for (std::size_t j = 0; j < perm.size(); ++j) {
    id += (j ? "," : "") + std::to_string(perm[j]);
  }
  id += ")";
  const int bins = static_cast<int>(perm.size());
  return exchange(std::move(id), bins,
                  [perm](const StateVector &) { return perm; });
}

Context Context::exchange(std::string id, int bins, Permutation perm) {
  if (bins <= 0) throw InvalidContext("exchange needs at least one bin");
  Context c;
  c.maps_.push_back({Elementary::Kind::kExchange, std::move(id), nullptr, bins,
                     std::move(perm)});
  return c;
}

Context Context::then(const Context &nu) const {
  Context c = *this;
  c.maps_.insert(c.maps_.end(), nu.maps_.begin(), nu.maps_.end());
  return c;
}

double Context::forward_one(const Elementary &m, double u,
                            const StateVector &canonical) {
  if (m.kind == Elementary::Kind::kRigid) {
    return wrap_angle(u + m.offset(canonical));
  }
  const std::vector<int> perm = m.perm(canonical);
  check_permutation(perm);
  const int j = bin_of(u, m.bins);
  const double shifted = u - bin_edge(j, m.bins) + bin_edge(perm[j], m.bins);
  return std::clamp(shifted, bin_edge(perm[j], m.bins),
                    bin_edge(perm[j] + 1, m.bins));
}

double Context::inverse_one(const Elementary &m, double u,
                            const StateVector &canonical) {
  if (m.kind == Elementary::Kind::kRigid) {
    return wrap_angle(u - m.offset(canonical));
  }
  const std::vector<int> perm = m.perm(canonical);
  check_permutation(perm);
  const std::vector<int> inv = invert(perm);
  const int j = bin_of(u, m.bins);
  const double shifted = u - bin_edge(j, m.bins) + bin_edge(inv[j], m.bins);
  return std::clamp(shifted, bin_edge(inv[j], m.bins),
                    bin_edge(inv[j] + 1, m.bins));
}

ArcSet Context::image_one(const Elementary &m, const ArcSet &arcs,
                          const StateVector &canonical) {
  if (m.kind == Elementary::Kind::kRigid) {
    return arcs.rotated(m.offset(canonical));
  }
  const std::vector<int> perm = m.perm(canonical);
  check_permutation(perm);
  std::vector<ArcSet::Piece> out;
  for (int j = 0; j < m.bins; ++j) {
    const double lo = bin_edge(j, m.bins);
    const double hi = bin_edge(j + 1, m.bins);
    const double dest = bin_edge(perm[j], m.bins);
    const double dest_hi = bin_edge(perm[j] + 1, m.bins);
    const ArcSet inside = arcs.intersect(ArcSet::between(lo, hi));
    for (const ArcSet::Piece &p : inside.pieces()) {
      // Endpoints that coincide with bin edges map onto the exact target
      // edges so that images of partitions stay partitions.
      const double a = p.lo == lo ? dest : std::clamp(p.lo - lo + dest, dest, dest_hi);
      const double b = p.hi == hi ? dest_hi : std::clamp(p.hi - lo + dest, dest, dest_hi);
      out.push_back({a, b});
    }
  }
  return ArcSet::from_pieces(std::move(out));
}

double Context::forward(double u, const StateVector &canonical) const {
  for (const Elementary &m : maps_) u = forward_one(m, u, canonical);
  return u;
}

double Context::inverse(double u, const StateVector &canonical) const {
  for (auto it = maps_.rbegin(); it != maps_.rend(); ++it) {
    u = inverse_one(*it, u, canonical);
  }
  return u;
}

ArcSet Context::image(const ArcSet &arcs, const StateVector &canonical) const {
  ArcSet out = arcs;
  for (const Elementary &m : maps_) out = image_one(m, out, canonical);
  return out;
}

std::string Context::id() const {
  if (maps_.empty()) return "identity";
  std::string s;
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    s += (i ? " then " : "") + maps_[i].id;
  }
  return s;
}

}  // namespace hv

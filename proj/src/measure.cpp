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

#include "hv/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hv {

namespace {

constexpr std::int64_t kChunks = 64;

}  // namespace

double PhaseSampler::draw() {
  // U in [0, 1) maps onto (-pi, pi].
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return kPi - kTwoPi * u;
}

PhaseSampler PhaseSampler::substream(std::uint64_t index) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                    static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), 0x68764d43U};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return PhaseSampler((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
}

int configured_threads() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char *env = std::getenv("HV_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

double born_exact(const StateVector &phi, const HiddenObservable &f,
                  const BorelSet &b) {
  return preimage_proposition(f, b).orbit_measure(phi);
}

MonteCarloEstimate born_monte_carlo(const Ray &ray, const HiddenObservable &f,
                                    const BorelSet &b, std::int64_t samples,
                                    const PhaseSampler &sampler, int threads) {
  if (samples < 1) throw std::invalid_argument("born_monte_carlo: N >= 1");
  if (threads <= 0) threads = configured_threads();
  const StateVector &rep = ray.representative();

  std::vector<std::int64_t> hits(kChunks, 0);
  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t begin = samples * c / kChunks;
    const std::int64_t end = samples * (c + 1) / kChunks;
    PhaseSampler local = sampler.substream(static_cast<std::uint64_t>(c));
    std::int64_t count = 0;
    for (std::int64_t k = begin; k < end; ++k) {
      const StateVector phi = rotate(rep, local.draw());
      if (b.contains(hidden_value(f, phi))) ++count;
    }
    hits[c] = count;
  };

  const int workers = static_cast<int>(std::min<std::int64_t>(threads, kChunks));
  if (workers <= 1) {
    for (std::int64_t c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::int64_t c = w; c < kChunks; c += workers) run_chunk(c);
      });
    }
    for (auto &t : pool) t.join();
  }

  std::int64_t total = 0;
  for (std::int64_t h : hits) total += h;
  const double p = static_cast<double>(total) / static_cast<double>(samples);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), total,
          samples};
}

double mean_value(const HiddenObservable &f, const Ray &ray) {
  const std::vector<ArcSet> cells = f.orbit_cells(ray.representative());
  double mean = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    mean += f.values()[i] * cells[i].measure();
  }
  return mean;
}

StateVector superposition(const StateVector &phi, const StateVector &psi,
                          double t) {
  return StateVector::normalized(std::cos(t) * phi.coords() +
                                 std::sin(t) * psi.coords());
}

FormFit form_fit(const StateVector &phi, const StateVector &psi,
                 const std::function<double(double)> &g, int samples) {
  const double overlap = std::abs(herm_inner(phi, psi));
  if (overlap > 1e-9) {
    throw NotOrthogonal("|<<phi,psi>>| = " + std::to_string(overlap));
  }
  if (samples < 3) throw std::invalid_argument("form_fit needs >= 3 samples");
  Eigen::MatrixXd design(samples, 3);
  RealVector y(samples);
  for (int j = 0; j < samples; ++j) {
    const double t = kPi * j / samples;
    const double c = std::cos(t);
    const double s = std::sin(t);
    design(j, 0) = c * c;
    design(j, 1) = s * c;
    design(j, 2) = s * s;
    y[j] = g(t);
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(y);
  const double residual = (design * coef - y).norm();
  return {coef[0], coef[1], coef[2], residual};
}

}  // namespace hv

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

#ifndef HV_MEASURE_HPP
#define HV_MEASURE_HPP

#include <cstdint>
#include <functional>
#include <random>

#include "hv/hidden.hpp"

namespace hv {

/// Uniform phases on (-pi, pi] from a seeded 64-bit Mersenne twister.
class PhaseSampler {
 public:
  explicit PhaseSampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  double draw();
  std::uint64_t seed() const { return seed_; }

  /// An independent generator for chunk `index` of a split run. The stream
  /// depends only on (seed, index), never on the number of workers.
  PhaseSampler substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

/// Exact probability mu_[phi](f^{-1}(B) on [phi]) by arc arithmetic.
double born_exact(const StateVector &phi, const HiddenObservable &f,
                  const BorelSet &b);

struct MonteCarloEstimate {
  double frequency;
  double stderr_;
  std::int64_t hits;
  std::int64_t samples;
};

/// Frequency of hidden_value(f, .) in B over `samples` uniform phases on the
/// ray. The work is cut into fixed chunks with their own substreams, so the
/// result is identical for any `threads` (0 reads HV_THREADS, default 1).
MonteCarloEstimate born_monte_carlo(const Ray &ray, const HiddenObservable &f,
                                    const BorelSet &b, std::int64_t samples,
                                    const PhaseSampler &sampler,
                                    int threads = 0);

/// Sum over values of f of value times normalized arc length.
double mean_value(const HiddenObservable &f, const Ray &ray);

/// Least-squares fit of g(t) = a cos^2 t + b sin t cos t + c sin^2 t.
struct FormFit {
  double a;
  double b;
  double c;
  /// Euclidean norm of the residual vector over the sample grid.
  double residual;
};

inline constexpr int kFormFitSamples = 64;
/// Residuals above this mean "not of the cos^2 / sin cos / sin^2 form".
inline constexpr double kFormFitRejectThreshold = 1e-3;

/// gamma(t) = cos t phi + sin t psi.
StateVector superposition(const StateVector &phi, const StateVector &psi,
                          double t);

/// Fits g on the grid t_j = j pi / samples, j = 0..samples-1. Throws
/// NotOrthogonal unless |<<phi, psi>>| <= 1e-9.
FormFit form_fit(const StateVector &phi, const StateVector &psi,
                 const std::function<double(double)> &g,
                 int samples = kFormFitSamples);

/// Hardware concurrency, capped by HV_THREADS when set (at least 1).
int configured_threads();

}  // namespace hv

#endif  // HV_MEASURE_HPP

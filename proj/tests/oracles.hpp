// Copyright 2026 The pmlcontract Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force oracles and sampling helpers shared by the unit tests and the
// acceptance runner. Everything here recomputes quantities by a method
// independent of the library's closed forms, so agreement is evidence and
// not circularity.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pmlcontract/leakage.hpp"
#include "pmlcontract/random.hpp"
#include "pmlcontract/types.hpp"

namespace pmlc::testing {

// All step-grid points of the simplex on n letters: coordinates are
// multiples of 1/r with r = round(1/step).
inline std::vector<std::vector<double>> simplex_grid(std::size_t n,
                                                     double step) {
  const long r = std::lround(1.0 / step);
  std::vector<std::vector<double>> points;
  std::vector<double> current(n, 0.0);
  auto emit = [&](auto&& self, std::size_t at, long remaining) -> void {
    if (at + 1 == n) {
      current[at] = static_cast<double>(remaining) / static_cast<double>(r);
      points.push_back(current);
      return;
    }
    for (long t = 0; t <= remaining; ++t) {
      current[at] = static_cast<double>(t) / static_cast<double>(r);
      self(self, at + 1, remaining - t);
    }
  };
  emit(emit, 0, r);
  return points;
}

// Grid supremization of the per-outcome leakage over all step-grid priors
// with min mass >= c. When c is a multiple of the step, the extreme points
// of the min-mass set are themselves grid points, so the result matches the
// closed-form capacity to float precision.
inline double grid_capacity_oracle(const StochasticKernel& k, double c,
                                   double step) {
  double best = 0.0;
  for (const auto& point : simplex_grid(k.inputs(), step)) {
    double lo = point[0];
    for (double v : point) lo = std::min(lo, v);
    if (lo < c - kCredalSlack) continue;
    const Distribution p(point);
    for (std::size_t y = 0; y < k.outputs(); ++y) {
      best = std::max(best, pml_pointwise(k, p, y));
    }
  }
  return best;
}

inline Distribution random_distribution(Rng& rng, std::size_t n) {
  return Distribution(sample_simplex(rng, n));
}

inline StochasticKernel random_kernel(Rng& rng, std::size_t n,
                                      std::size_t m) {
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x) rows.push_back(sample_simplex(rng, m));
  return StochasticKernel(std::move(rows));
}

// A kernel with entries bounded away from zero: Dirichlet rows mixed with
// the uniform row. Useful where a finite worst-case entry ratio is needed.
inline StochasticKernel random_positive_kernel(Rng& rng, std::size_t n,
                                               std::size_t m,
                                               double uniform_weight = 0.1) {
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto row = sample_simplex(rng, m);
    for (auto& v : row) {
      v = (1.0 - uniform_weight) * v +
          uniform_weight / static_cast<double>(m);
    }
    rows.push_back(std::move(row));
  }
  return StochasticKernel(std::move(rows));
}

}  // namespace pmlc::testing

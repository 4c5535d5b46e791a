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

#include "pmlcontract/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pmlcontract/bounds.hpp"
#include "pmlcontract/leakage.hpp"
#include "pmlcontract/random.hpp"

namespace pmlc {

StochasticKernel construct_optimal(const BinaryMechanismSpec& spec) {
  PrivacyBudget budget{spec.epsilon, spec.c};
  budget.validate_for(spec.n);
  if (spec.q < 1 || spec.q >= spec.n) {
    throw DomainError("count of maximal entries must lie in [1, N-1], got " +
                      std::to_string(spec.q));
  }
  const double threshold = regime_threshold(spec.c, spec.n);
  if (spec.epsilon >= threshold) {
    throw RegimeError(
        "leakage budget " + std::to_string(spec.epsilon) +
        " is at or above the saturation threshold " +
        std::to_string(threshold) + "; no contractive optimum exists");
  }
  const double e = std::exp(spec.epsilon);
  const double nc = static_cast<double>(spec.n) * spec.c;
  const double qd = static_cast<double>(spec.q);
  const double denom = 1.0 + e * (1.0 - nc);
  const double m = (1.0 - e * spec.c * qd) / denom;
  const double big = e * (1.0 - spec.c * qd) / denom;
  if (!(m > 0.0) || !(big < 1.0)) {
    throw InfeasibleQ("q = " + std::to_string(spec.q) +
                      " yields column entries m = " + std::to_string(m) +
                      ", M = " + std::to_string(big) +
                      " outside (0, 1); pick a different q");
  }
  std::vector<std::vector<double>> rows(spec.n);
  for (std::size_t x = 0; x < spec.n; ++x) {
    const double p = x < spec.q ? big : m;
    rows[x] = {p, 1.0 - p};
  }
  return StochasticKernel(std::move(rows));
}

StochasticKernel binary_optimal(double epsilon, double c) {
  return construct_optimal({2, epsilon, c, 1});
}

FeasibilityResult feasibility(const std::vector<double>& p, double epsilon,
                              double c) {
  const std::size_t n = p.size();
  if (n < 2) throw DomainError("first column needs at least 2 entries");
  for (double v : p) {
    if (!(v >= 0.0) || !(v <= 1.0)) {
      throw DomainError("first-column entries must lie in [0, 1]");
    }
  }
  PrivacyBudget budget{epsilon, c};
  budget.validate_for(n);

  const double e = std::exp(epsilon);
  const double nc = static_cast<double>(n) * c;
  const auto evaluate = [&](auto entry) {
    double max = entry(0), min = entry(0), sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      max = std::max(max, entry(i));
      min = std::min(min, entry(i));
      sum += entry(i);
    }
    return max - e * (c * sum + (1.0 - nc) * min);
  };
  FeasibilityResult r;
  r.f1 = evaluate([&](std::size_t i) { return p[i]; });
  r.f2 = evaluate([&](std::size_t i) { return 1.0 - p[i]; });
  r.feasible = r.f1 <= 1e-12 && r.f2 <= 1e-12;
  return r;
}

ReferenceKernels reference_kernels() {
  const double hi = 15.0 / 16.0;
  const double lo = 1.0 / 16.0;
  std::vector<std::vector<double>> k1_rows;
  for (int x = 0; x < 10; ++x) {
    k1_rows.push_back(x < 5 ? std::vector<double>{hi, lo}
                            : std::vector<double>{lo, hi});
  }
  const double t = 1.0 / 3.0;
  std::vector<std::vector<double>> k2_rows = {
      {t, t, t, 0, 0},
      {0, t, t, t, 0},
      {0, 0, t, t, t},
      {t, 0, 0, t, t},
      {t, t, 0, 0, t},
  };
  return {StochasticKernel(std::move(k1_rows)),
          StochasticKernel(std::move(k2_rows))};
}

StochasticKernel sample_kernel(std::size_t n, std::size_t m,
                               const PrivacyBudget& budget, std::uint64_t seed,
                               int max_tries) {
  budget.validate_for(n);
  if (m < 2) throw DomainError("kernel needs at least 2 output symbols");
  if (max_tries < 1) throw DomainError("max_tries must be >= 1");

  Rng rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<std::vector<double>> rows(n);
    for (auto& row : rows) row = sample_simplex(rng, m);

    // Column averages: mixing every row toward them is the lambda = 1
    // endpoint, the constant kernel with zero leakage.
    std::vector<double> avg(m, 0.0);
    for (const auto& row : rows) {
      for (std::size_t y = 0; y < m; ++y) avg[y] += row[y];
    }
    for (auto& a : avg) a /= static_cast<double>(n);

    const auto mixed = [&](double lambda) {
      std::vector<std::vector<double>> out(n);
      for (std::size_t x = 0; x < n; ++x) {
        out[x].resize(m);
        for (std::size_t y = 0; y < m; ++y) {
          out[x][y] = (1.0 - lambda) * rows[x][y] + lambda * avg[y];
        }
      }
      return out;
    };
    const auto capacity_at = [&](double lambda) {
      return leakage_capacity(
          StochasticKernel(mixed(lambda), ColumnPolicy::kAllowDeadColumns),
          budget.c);
    };

    double cap0;
    try {
      cap0 = leakage_capacity(StochasticKernel(rows), budget.c);
    } catch (const DeadColumnError&) {
      continue;  // a simplex draw put (near-)zero mass everywhere in a column
    }
    if (cap0 <= budget.epsilon + kLeakageSlack) {
      return StochasticKernel(std::move(rows));
    }

    // Shrink toward the constant kernel: bisect for the smallest mixing
    // weight within budget. The bracket [lo, hi] keeps capacity(lo) above
    // the budget and capacity(hi) within it; if a step ever loses the
    // bracket (the capacity profile is only empirically monotone along the
    // path), fall back to a linear scan from the constant end.
    double lo = 0.0, hi = 1.0;
    if (capacity_at(1.0) > budget.epsilon + kLeakageSlack) {
      continue;  // cannot happen: constant kernels have zero leakage
    }
    bool bracket_ok = true;
    for (int step = 0; step < 40 && bracket_ok; ++step) {
      const double mid = 0.5 * (lo + hi);
      const double cap = capacity_at(mid);
      if (cap <= budget.epsilon + kLeakageSlack) {
        hi = mid;
      } else {
        lo = mid;
      }
      bracket_ok = lo < hi;
    }
    if (!bracket_ok) {
      hi = 1.0;
      for (double lambda = 0.0; lambda < 1.0; lambda += 1.0 / 40.0) {
        if (capacity_at(lambda) <= budget.epsilon + kLeakageSlack) {
          hi = lambda;
          break;
        }
      }
    }
    auto final_rows = mixed(hi);
    try {
      return StochasticKernel(std::move(final_rows));
    } catch (const DeadColumnError&) {
      continue;
    }
  }
  throw ExhaustedError("no kernel meeting the budget after " +
                       std::to_string(max_tries) + " attempts");
}

}  // namespace pmlc

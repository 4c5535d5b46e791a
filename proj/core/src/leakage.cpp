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

#include "pmlcontract/leakage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pmlc {

namespace {

struct ColumnStats {
  double max = 0.0;
  double min = 0.0;
  double sum = 0.0;
};

ColumnStats column_stats(const StochasticKernel& k, std::size_t y) {
  ColumnStats s;
  s.max = s.min = k(0, y);
  s.sum = 0.0;
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    const double v = k(x, y);
    s.max = std::max(s.max, v);
    s.min = std::min(s.min, v);
    s.sum += v;
  }
  return s;
}

void require_full_support(const Distribution& p) {
  if (!p.full_support()) {
    throw SupportError("prior must have full support (a mass is zero)");
  }
}

}  // namespace

double pml_pointwise(const StochasticKernel& k, const Distribution& p,
                     std::size_t y) {
  if (p.size() != k.inputs()) {
    throw DimensionMismatch("prior size does not match kernel inputs");
  }
  if (y >= k.outputs()) {
    throw DomainError("output index " + std::to_string(y) + " out of range");
  }
  require_full_support(p);
  double marginal = 0.0;
  double colmax = 0.0;
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    marginal += k(x, y) * p[x];
    colmax = std::max(colmax, k(x, y));
  }
  if (marginal <= kZeroMass) {
    throw DeadOutcomeError("outcome " + std::to_string(y) +
                           " has zero marginal probability");
  }
  // The marginal is a convex combination of column entries, so the ratio is
  // >= 1; clamp float dust to keep the value nonnegative.
  return std::max(0.0, std::log(colmax / marginal));
}

LeakageReport pml_report(const StochasticKernel& k, const Distribution& p) {
  LeakageReport report;
  report.per_outcome.reserve(k.outputs());
  for (std::size_t y = 0; y < k.outputs(); ++y) {
    report.per_outcome.push_back(pml_pointwise(k, p, y));
  }
  report.capacity =
      *std::max_element(report.per_outcome.begin(), report.per_outcome.end());
  return report;
}

double leakage_capacity(const StochasticKernel& k, double c) {
  CredalSet set(c, k.inputs());  // validates c
  const double nc = static_cast<double>(k.inputs()) * c;
  double best = 0.0;
  for (std::size_t y = 0; y < k.outputs(); ++y) {
    const ColumnStats s = column_stats(k, y);
    if (s.max <= kZeroMass) continue;  // dead column: outcome never occurs
    const double denom = c * s.sum + (1.0 - nc) * s.min;
    best = std::max(best, std::log(s.max / denom));
  }
  return std::max(0.0, best);
}

bool satisfies_pml(const StochasticKernel& k, const PrivacyBudget& budget) {
  budget.validate_for(k.inputs());
  return leakage_capacity(k, budget.c) <= budget.epsilon + kLeakageSlack;
}

ExtendedReal ldp(const StochasticKernel& k) {
  double best = 0.0;
  for (std::size_t y = 0; y < k.outputs(); ++y) {
    const ColumnStats s = column_stats(k, y);
    if (s.max <= kZeroMass) continue;
    if (s.min <= kZeroMass) return ExtendedReal::infinity();
    best = std::max(best, std::log(s.max / s.min));
  }
  return ExtendedReal::finite(best);
}

int max_zeros_per_column(const PrivacyBudget& budget, std::size_t n) {
  budget.validate_for(n);
  const double floor = std::exp(-budget.epsilon);
  // Walk down from the largest candidate; the small slack keeps exact
  // threshold cases (floor == (N - z) c) on the inclusive side.
  for (int z = static_cast<int>(n) - 1; z > 0; --z) {
    if ((static_cast<double>(n) - z) * budget.c >= floor - 1e-12) return z;
  }
  return 0;
}

double subset_disclosure_floor(const StochasticKernel& k,
                               const Distribution& p, std::size_t y) {
  if (p.size() != k.inputs()) {
    throw DimensionMismatch("prior size does not match kernel inputs");
  }
  if (y >= k.outputs()) {
    throw DomainError("output index " + std::to_string(y) + " out of range");
  }
  require_full_support(p);
  double marginal = 0.0;
  double support_mass = 0.0;
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    marginal += k(x, y) * p[x];
    if (k(x, y) > kZeroMass) support_mass += p[x];
  }
  if (marginal <= kZeroMass) {
    throw DeadOutcomeError("outcome " + std::to_string(y) +
                           " has zero marginal probability");
  }
  return std::max(0.0, -std::log(support_mass));
}

}  // namespace pmlc

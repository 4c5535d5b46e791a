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

#pragma once

#include <vector>

#include "pmlcontract/extended_real.hpp"
#include "pmlcontract/types.hpp"

namespace pmlc {

// Per-outcome leakage of a kernel under a fixed full-support prior, plus the
// maximum over outcomes. All entries are nonnegative.
struct LeakageReport {
  std::vector<double> per_outcome;  // nats, one entry per output symbol
  double capacity = 0.0;            // max over outcomes
};

// Leakage to outcome y under prior p:
// log( max_x k(y|x) / marginal(y) ), >= 0.
// Requires full-support p (SupportError) and a reachable outcome
// (DeadOutcomeError when the marginal of y vanishes).
double pml_pointwise(const StochasticKernel& k, const Distribution& p,
                     std::size_t y);

// pml_pointwise at every outcome plus the maximum.
LeakageReport pml_report(const StochasticKernel& k, const Distribution& p);

// Worst-case leakage of k over all priors with min mass >= c, in closed
// form:
//   max_y log( max_x k(y|x) / (c * colsum(y) + (1 - N c) * colmin(y)) ).
// The supremum over the min-mass-c prior set is attained at its extreme
// points, which is what the denominator encodes; the value is finite for
// every validated kernel. Throws DomainError when c is outside (0, 1/N].
double leakage_capacity(const StochasticKernel& k, double c);

// leakage_capacity(k, c) <= epsilon + kLeakageSlack.
bool satisfies_pml(const StochasticKernel& k, const PrivacyBudget& budget);

// Worst-case log ratio of kernel entries across inputs, per output symbol:
// sup_{y, x, x'} log( k(y|x) / k(y|x') ). Infinite exactly when some column
// mixes a zero with a positive entry.
ExtendedReal ldp(const StochasticKernel& k);

// The largest number of zeros a single kernel column can carry while the
// kernel still meets the budget: the largest z in {0, ..., N-1} with
// (N - z) * c >= e^{-epsilon}. Boundary-inclusive: equality permits the
// larger count.
int max_zeros_per_column(const PrivacyBudget& budget, std::size_t n);

// -log p(X_sub) where X_sub = {x : k(y|x) > 0}: no outcome can disclose
// membership in a sub-population more sharply than its leakage, so this
// floor is always <= pml_pointwise(k, p, y) + 1e-12.
double subset_disclosure_floor(const StochasticKernel& k,
                               const Distribution& p, std::size_t y);

}  // namespace pmlc

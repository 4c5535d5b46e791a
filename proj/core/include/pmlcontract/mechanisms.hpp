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

#include <cstdint>
#include <vector>

#include "pmlcontract/types.hpp"

namespace pmlc {

// Parameters of the two-output mechanism with q maximal first-column
// entries. The construction sets
//   m = (1 - e^eps c q) / (1 + e^eps (1 - N c)),
//   M = e^eps (1 - c q) / (1 + e^eps (1 - N c)),
// and requires 0 < m <= M < 1 to produce a valid kernel.
struct BinaryMechanismSpec {
  std::size_t n = 2;
  double epsilon = 0.0;
  double c = 0.0;
  std::size_t q = 1;  // count of maximal first-column entries, in [1, N-1]
};

// Builds the N x 2 kernel whose first column is (M, ..., M, m, ..., m) with
// q copies of M. Among all kernels with leakage at most epsilon against
// min-mass-c priors, this one maximizes the TV contraction coefficient, and
// it meets the leakage budget with equality:
//   leakage_capacity(result, c) = epsilon (+-1e-9),
//   dobrushin(result) = (e^eps - 1)/(e^eps (1 - N c) + 1) (+-1e-12),
// the latter independent of q.
// Throws RegimeError when epsilon >= log(2/(N c)) (no contractive optimum
// exists there), InfeasibleQ when this q forces m <= 0 or M >= 1, and
// DomainError on invalid parameters.
StochasticKernel construct_optimal(const BinaryMechanismSpec& spec);

// The symmetric 2 x 2 optimum: entries e^eps (1 - c) / D and
// (1 - e^eps c) / D with D = e^eps (1 - 2c) + 1. Equals
// construct_optimal({2, epsilon, c, 1}). Requires epsilon < log(1/c).
StochasticKernel binary_optimal(double epsilon, double c);

// The two active constraints of the binary-mechanism feasibility polytope,
// evaluated at first column p:
//   f1 = max p - e^eps (c * sum p + (1 - N c) * min p)
//   f2 = the same functional on 1 - p.
// Feasible (both <= 1e-12) iff the kernel [p, 1-p] meets the (eps, c)
// budget.
struct FeasibilityResult {
  double f1 = 0.0;
  double f2 = 0.0;
  bool feasible = false;
};

FeasibilityResult feasibility(const std::vector<double>& p, double epsilon,
                              double c);

// The worked reference mechanisms used across tests and experiments: k1 is
// the 10 x 2 two-block kernel with entries 15/16 and 1/16; k2 is the 5 x 5
// circulant with three 1/3 entries per row. Entries are exact dyadic or
// nearest-double rationals, so downstream checks are bit-stable.
struct ReferenceKernels {
  StochasticKernel k1;
  StochasticKernel k2;
};

ReferenceKernels reference_kernels();

// Draws a random kernel meeting the budget: rows are sampled uniformly from
// the simplex; if the draw leaks more than epsilon, every row is mixed
// toward the column-average row with the smallest weight lambda (40-step
// bisection) that brings the leakage within budget. lambda = 1 is the
// constant kernel with zero leakage, so the bisection always brackets.
// Deterministic given seed.
StochasticKernel sample_kernel(std::size_t n, std::size_t m,
                               const PrivacyBudget& budget,
                               std::uint64_t seed, int max_tries = 100);

}  // namespace pmlc

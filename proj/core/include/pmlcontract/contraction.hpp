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
#include <optional>
#include <utility>

#include "pmlcontract/divergences.hpp"
#include "pmlcontract/types.hpp"

namespace pmlc {

struct SearchConfig {
  int restarts = 200;
  int refine_rounds = 50;
  std::uint64_t seed = 0;
};

// Result of a contraction-coefficient search: the best ratio found (a lower
// bound on the coefficient), the input pair achieving it, an analytic upper
// cap, and how many candidate evaluations were spent.
// Invariant: 0 <= lower <= upper <= 1 + 1e-12.
struct ContractionEstimate {
  double lower;
  Distribution witness_p;
  Distribution witness_q;
  double upper;
  long iterations;
};

// The TV contraction coefficient, exactly: max over input pairs of the TV
// distance between kernel rows. In [0, 1].
double dobrushin(const StochasticKernel& k);

// Collapses the output alphabet to {E*, complement} where
// E* = {y : marginal_p(y) > marginal_q(y)} is a TV-achieving event. The
// returned N x 2 kernel preserves tv(marginal_p, marginal_q) exactly and
// never increases leakage_capacity at any c (post-processing). When the two
// marginals coincide, E* is empty and the result is the constant collapse
// with rows (0, 1); this degenerate kernel keeps a dead first column and is
// the documented fallback rather than an error.
StochasticKernel binarize(const StochasticKernel& k, const Distribution& p,
                          const Distribution& q);

// Best-effort maximization of D_f(Kp, Kq) / D_f(p, q) by random restarts
// plus per-coordinate mixture line search. When min_mass is given, the pair
// is restricted to {p : min p >= min_mass} via the extreme-point
// reparameterization, so every candidate is feasible by construction.
// Deterministic given config.seed. The returned lower bound never exceeds
// dobrushin(k) + 1e-9.
ContractionEstimate empirical_eta_f(const StochasticKernel& k,
                                    const DivergenceSpec& spec,
                                    std::optional<double> min_mass,
                                    const SearchConfig& config);

// Chi-squared contraction coefficient via maximal correlation: for each
// candidate prior p, the coefficient of the pair (p, k) is the squared
// second-largest singular value of B(x, y) = sqrt(p(x)) k(y|x) /
// sqrt(marginal(y)) (zero-marginal outputs dropped); the estimate
// supremizes over p. The top singular pair of B is known analytically
// (value 1, left vector sqrt(p)), so the second is found by power iteration
// after deflation. Both witness entries name the same achieving prior.
ContractionEstimate eta_chi2(const StochasticKernel& k,
                             const SearchConfig& config);

// The witnessing input pair (x, x') whose rows have disjoint support
// (masses <= kZeroMass count as zero), or nullopt when none exists. A
// disjoint pair forces the TV contraction coefficient to 1 and every
// smooth-f coefficient with it.
std::optional<std::pair<std::size_t, std::size_t>> is_decomposable(
    const StochasticKernel& k);

// Exhaustive grid oracle for the TV contraction coefficient: maximizes
// tv(Kp, Kq)/tv(p, q) over all pairs of step-grid simplex points. Only for
// cross-checking the closed form; N <= 4 (SizeError), grid_step in
// [1e-3, 0.1] (DomainError).
double brute_force_eta_tv(const StochasticKernel& k, double grid_step);

}  // namespace pmlc

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

#include <map>
#include <string>

#include "pmlcontract/divergences.hpp"

namespace pmlc {

enum class Regime {
  kContractive,  // xi < 1: leakage budget forces strict TV contraction
  kSaturated,    // xi = 1: budget admits non-contracting mechanisms
};

// A bound value plus audit context: the regime and the intermediate
// quantities (xi, gamma_max, gamma_min, threshold, ...) that produced it.
// value >= 0; regime == kSaturated exactly when the xi component is 1.
struct BoundReport {
  double value = 0.0;
  Regime regime = Regime::kContractive;
  std::map<std::string, double> components;
};

// Cap on the TV contraction coefficient of any kernel whose leakage against
// min-mass-c priors is at most epsilon:
//   min{ (e^eps - 1) / (e^eps (1 - N c) + 1), 1 }.
// Monotone nondecreasing in epsilon and in c; 0 at epsilon = 0; reaches 1
// exactly at the regime threshold.
double xi(double epsilon, double c, std::size_t n);

// log(2 / (N c)): at or above this leakage level the cap saturates at 1 and
// every smooth-f contraction coefficient can reach 1.
double regime_threshold(double c, std::size_t n);

// Extremal bounds on the ratio of output marginals across two min-mass-c
// priors pushed through any within-budget kernel:
//   max_ratio = (1 - N c) e^eps + 1, min_ratio = its reciprocal.
// Valid for 0 <= epsilon <= -log c (DomainError outside).
struct GammaBounds {
  double max_ratio = 1.0;
  double min_ratio = 1.0;
};

GammaBounds gamma_bounds(double epsilon, double c, std::size_t n);

// Reverse-Pinsker-style bound on any f-divergence between output marginals:
//   xi * [ f(g_min)/(1 - g_min) + f(g_max)/(g_max - 1) ] * delta
// with (g_max, g_min) from gamma_bounds and delta the input TV distance.
// Returns exactly 0 when g_max = 1 (the bracket's removable limit).
// Throws GeneratorError when the generator is not finite at the ratio
// extremes.
double binette_bound(const DivergenceSpec& spec, double epsilon, double c,
                     std::size_t n, double delta);

// The closed-form collapse of binette_bound for relative entropy:
//   xi * log((1 - N c) e^eps + 1) * delta.
// Evaluated for every epsilon >= 0; beyond -log c the marginal-ratio
// hypothesis backing it no longer holds, which report_bound flags.
double kl_bound(double epsilon, double c, std::size_t n, double delta);

// The collapse for squared Hellinger:
//   xi * (2 - 4 / (sqrt((1 - N c) e^eps + 1) + 1)) * delta.
double hellinger_bound(double epsilon, double c, std::size_t n, double delta);

// External-baseline comparison: cap on the TV contraction coefficient of
// any kernel with worst-case per-entry log ratio (LDP level) at most
// epsilon: (e^eps - 1)/(e^eps + 1). Also the c -> 0 limit of xi.
double kairouz_eta_bound(double epsilon);

// External-baseline comparison: KL bound for LDP-level-epsilon kernels,
//   min{4, e^{2 eps}} (e^eps - 1)^2 * tv_delta^2.
double duchi_kl_bound(double epsilon, double tv_delta);

// External-baseline comparison: the KL contraction coefficient cap
// ((e^eps - 1)/(e^eps + 1))^2 for LDP-level-epsilon kernels. Only the
// coefficient; no marginal-ratio chaining is applied.
double asoodeh_eta_kl_bound(double epsilon);

// Two-point lower bound on minimax estimation risk from n samples observed
// through a within-budget kernel, at prior separation delta:
//   0.5 * exp(-n * xi * log((1 - N c) e^eps + 1) * delta).
double minimax_lower_bound(long n, double epsilon, double c, std::size_t n_x,
                           double delta);

// Smallest n whose risk lower bound drops to target_risk, i.e. the ceiling
// of log(0.5/target)/(xi * log((1 - N c) e^eps + 1) * delta), adjusted so
// that bound(n) <= target < bound(n - 1). Throws SaturationError when the
// rate is 0 (the bound never reaches the target).
long sample_complexity(double epsilon, double c, std::size_t n_x, double delta,
                       double target_risk);

// Audit-friendly wrappers used by the CLI: value plus regime plus the
// intermediate quantities.
BoundReport report_xi(double epsilon, double c, std::size_t n);
BoundReport report_threshold(double c, std::size_t n);
BoundReport report_gamma(double epsilon, double c, std::size_t n);
// kind-dispatch for the divergence bounds; spec selects the generator.
BoundReport report_divergence_bound(const DivergenceSpec& spec, double epsilon,
                                    double c, std::size_t n, double delta);
BoundReport report_kairouz(double epsilon);
BoundReport report_duchi(double epsilon, double tv_delta);
BoundReport report_asoodeh(double epsilon);
BoundReport report_minimax(long n_samples, double epsilon, double c,
                           std::size_t n, double delta);
BoundReport report_sample_complexity(double epsilon, double c, std::size_t n,
                                     double delta, double target_risk);

}  // namespace pmlc

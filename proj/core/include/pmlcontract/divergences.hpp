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

#include <functional>
#include <span>

#include "pmlcontract/extended_real.hpp"
#include "pmlcontract/types.hpp"

namespace pmlc {

// A user-supplied f-divergence generator: convex f on (0, inf) with f(1) = 0.
// Convexity is the caller's contract and is not verified. The boundary
// behavior must be declared, not inferred: limit_at_zero is lim_{t->0+} f(t)
// and slope_at_infinity is lim_{t->inf} f(t)/t. Zero-mass terms of the
// divergence are resolved from these two limits.
struct GenericGenerator {
  std::function<double(double)> f;
  ExtendedReal limit_at_zero = ExtendedReal::finite(0.0);
  ExtendedReal slope_at_infinity = ExtendedReal::infinity();
};

// Selects which f-divergence to evaluate. The four built-in kinds have
// dedicated closed forms; Generic evaluates the supplied generator.
class DivergenceSpec {
 public:
  enum class Kind { kTv, kKl, kHellingerSq, kChiSq, kGeneric };

  static DivergenceSpec total_variation() { return DivergenceSpec(Kind::kTv); }
  static DivergenceSpec kl() { return DivergenceSpec(Kind::kKl); }
  static DivergenceSpec hellinger_sq() {
    return DivergenceSpec(Kind::kHellingerSq);
  }
  static DivergenceSpec chi_sq() { return DivergenceSpec(Kind::kChiSq); }
  // Throws GeneratorError unless |f(1)| <= 1e-12.
  static DivergenceSpec generic(GenericGenerator gen);

  Kind kind() const { return kind_; }
  const GenericGenerator& generator() const { return gen_; }

  // The generator value f(t) for t > 0: the built-in kinds use their closed
  // forms (0.5|t-1|, t log t, (1-sqrt(t))^2, (t-1)^2). Used by bound
  // evaluations that probe f at likelihood-ratio extremes.
  double generator_value(double t) const;

 private:
  explicit DivergenceSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
  GenericGenerator gen_;
};

// Total variation distance: 0.5 * sum |p - q|, in [0, 1]. Equals the maximum
// over events E of P(E) - Q(E).
double tv(std::span<const double> p, std::span<const double> q);
double tv(const Distribution& p, const Distribution& q);

// Relative entropy sum_{p(x)>0} p(x) log(p(x)/q(x)) in nats, with the
// 0 log 0 = 0 convention; infinite when p is not absolutely continuous
// w.r.t. q.
ExtendedReal kl(const Distribution& p, const Distribution& q);

// Squared Hellinger divergence sum (sqrt(p) - sqrt(q))^2, in [0, 2].
double hellinger_sq(const Distribution& p, const Distribution& q);

// Chi-squared divergence sum (p - q)^2 / q with 0/0 terms dropped; infinite
// when q(x) = 0 < p(x).
ExtendedReal chi_sq(const Distribution& p, const Distribution& q);

// E_Q[f(dP/dQ)]. Terms with q(x) = 0 < p(x) contribute p(x) * slope of f at
// infinity; terms with p(x) = 0 < q(x) contribute q(x) * limit of f at 0+;
// p(x) = q(x) = 0 contributes nothing. Dispatches to the dedicated
// evaluators for the built-in kinds.
ExtendedReal f_div(const DivergenceSpec& spec, const Distribution& p,
                   const Distribution& q);

}  // namespace pmlc

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

#include "pmlcontract/bounds.hpp"

#include <cmath>
#include <string>

#include "pmlcontract/types.hpp"

namespace pmlc {

namespace {

// Above this the exponentials overflow; every formula below has already
// reached its large-epsilon limit to full double precision.
constexpr double kExpCutoff = 700.0;

void check_budget(double epsilon, double c, std::size_t n) {
  PrivacyBudget{epsilon, c}.validate_for(n);
}

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0) || !(v <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1]");
  }
}

// (1 - N c) e^eps + 1 with the two fragile corners handled: the slack
// 1 - N c is clamped to 0 so c = 1/N dust cannot go negative, and the
// clamped-zero case short-circuits before 0 * inf can produce a NaN.
double gamma_max_value(double epsilon, double c, std::size_t n) {
  const double slack = std::max(1.0 - static_cast<double>(n) * c, 0.0);
  if (slack == 0.0) return 1.0;
  return slack * std::exp(epsilon) + 1.0;
}

// log of the above, overflow-free for any epsilon.
double log_gamma_max(double epsilon, double c, std::size_t n) {
  const double slack = std::max(1.0 - static_cast<double>(n) * c, 0.0);
  if (slack == 0.0) return 0.0;
  if (epsilon > kExpCutoff) return epsilon + std::log(slack);
  return std::log1p(slack * std::exp(epsilon));
}

}  // namespace

double xi(double epsilon, double c, std::size_t n) {
  check_budget(epsilon, c, n);
  if (epsilon > kExpCutoff) return 1.0;
  const double denom =
      std::exp(epsilon) * (1.0 - static_cast<double>(n) * c) + 1.0;
  const double ratio = std::expm1(epsilon) / denom;
  return ratio >= 1.0 ? 1.0 : ratio;
}

double regime_threshold(double c, std::size_t n) {
  CredalSet set(c, n);  // validates c against n
  return std::log(2.0 / (static_cast<double>(n) * set.c()));
}

GammaBounds gamma_bounds(double epsilon, double c, std::size_t n) {
  check_budget(epsilon, c, n);
  const double cap = -std::log(c);
  if (epsilon > cap) {
    throw DomainError("marginal-ratio bounds need epsilon <= -log c = " +
                      std::to_string(cap) + ", got " + std::to_string(epsilon));
  }
  const double g = gamma_max_value(epsilon, c, n);
  return {g, 1.0 / g};
}

double binette_bound(const DivergenceSpec& spec, double epsilon, double c,
                     std::size_t n, double delta) {
  check_unit_interval(delta, "delta");
  const GammaBounds g = gamma_bounds(epsilon, c, n);
  // g.max_ratio = 1 happens only at c = 1/N, where both output marginals
  // coincide and the bracket's removable singularity has limit value 0.
  if (g.max_ratio <= 1.0 + 1e-15) return 0.0;
  const double lo = spec.generator_value(g.min_ratio);
  const double hi = spec.generator_value(g.max_ratio);
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw GeneratorError(
        "divergence generator is not finite at the marginal-ratio extremes");
  }
  const double bracket = lo / (1.0 - g.min_ratio) + hi / (g.max_ratio - 1.0);
  return xi(epsilon, c, n) * bracket * delta;
}

double kl_bound(double epsilon, double c, std::size_t n, double delta) {
  check_budget(epsilon, c, n);
  check_unit_interval(delta, "delta");
  return xi(epsilon, c, n) * log_gamma_max(epsilon, c, n) * delta;
}

double hellinger_bound(double epsilon, double c, std::size_t n, double delta) {
  check_budget(epsilon, c, n);
  check_unit_interval(delta, "delta");
  const double g = gamma_max_value(epsilon, c, n);  // inf collapses to 2 below
  return xi(epsilon, c, n) * (2.0 - 4.0 / (std::sqrt(g) + 1.0)) * delta;
}

double kairouz_eta_bound(double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  if (epsilon > kExpCutoff) return 1.0;
  return std::expm1(epsilon) / (std::exp(epsilon) + 1.0);
}

double duchi_kl_bound(double epsilon, double tv_delta) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  check_unit_interval(tv_delta, "tv_delta");
  const double lead =
      epsilon > 1.0 ? 4.0 : std::min(4.0, std::exp(2.0 * epsilon));
  const double diff = std::expm1(epsilon);
  return lead * diff * diff * tv_delta * tv_delta;
}

double asoodeh_eta_kl_bound(double epsilon) {
  const double k = kairouz_eta_bound(epsilon);
  return k * k;
}

double minimax_lower_bound(long n, double epsilon, double c, std::size_t n_x,
                           double delta) {
  if (n < 1) throw DomainError("sample count must be >= 1");
  check_budget(epsilon, c, n_x);
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw DomainError("separation delta must lie in (0, 1)");
  }
  const double rate = xi(epsilon, c, n_x) * log_gamma_max(epsilon, c, n_x) * delta;
  return 0.5 * std::exp(-static_cast<double>(n) * rate);
}

long sample_complexity(double epsilon, double c, std::size_t n_x, double delta,
                       double target_risk) {
  if (!(target_risk > 0.0) || !(target_risk < 0.5)) {
    throw DomainError("target risk must lie in (0, 0.5)");
  }
  check_budget(epsilon, c, n_x);
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw DomainError("separation delta must lie in (0, 1)");
  }
  const double g =
      gamma_max_value(epsilon > kExpCutoff ? kExpCutoff : epsilon, c, n_x);
  const double rate = xi(epsilon, c, n_x) * std::log(g) * delta;
  if (!(rate > 0.0)) {
    throw SaturationError(
        "risk bound is constant at 0.5; it never reaches the target");
  }
  long n = static_cast<long>(std::ceil(std::log(0.5 / target_risk) / rate));
  if (n < 1) n = 1;
  // Ceiling arithmetic can land one off; settle the exact inversion
  // bound(n) <= target < bound(n - 1) by direct evaluation.
  while (minimax_lower_bound(n, epsilon, c, n_x, delta) > target_risk) ++n;
  while (n > 1 &&
         minimax_lower_bound(n - 1, epsilon, c, n_x, delta) <= target_risk) {
    --n;
  }
  return n;
}

namespace {

Regime regime_of(double xi_value) {
  return xi_value >= 1.0 ? Regime::kSaturated : Regime::kContractive;
}

// Common audit fields shared by every report built from a budget.
BoundReport base_report(double epsilon, double c, std::size_t n) {
  BoundReport r;
  const double x = xi(epsilon, c, n);
  r.regime = regime_of(x);
  r.components["xi"] = x;
  r.components["threshold"] = regime_threshold(c, n);
  return r;
}

}  // namespace

BoundReport report_xi(double epsilon, double c, std::size_t n) {
  BoundReport r = base_report(epsilon, c, n);
  r.value = r.components["xi"];
  return r;
}

BoundReport report_threshold(double c, std::size_t n) {
  BoundReport r;
  r.value = regime_threshold(c, n);
  r.components["threshold"] = r.value;
  return r;
}

BoundReport report_gamma(double epsilon, double c, std::size_t n) {
  BoundReport r = base_report(epsilon, c, n);
  const GammaBounds g = gamma_bounds(epsilon, c, n);
  r.value = g.max_ratio;
  r.components["gamma_max"] = g.max_ratio;
  r.components["gamma_min"] = g.min_ratio;
  return r;
}

BoundReport report_divergence_bound(const DivergenceSpec& spec, double epsilon,
                                    double c, std::size_t n, double delta) {
  BoundReport r = base_report(epsilon, c, n);
  const double g = gamma_max_value(epsilon, c, n);
  r.components["gamma_max"] = g;
  r.components["gamma_min"] = 1.0 / g;
  r.components["delta"] = delta;
  // The ratio extremes are certified only up to epsilon = -log c; past it
  // the closed forms still evaluate but rest on an unbacked hypothesis.
  r.components["beyond_ratio_domain"] = epsilon > -std::log(c) ? 1.0 : 0.0;
  switch (spec.kind()) {
    case DivergenceSpec::Kind::kKl:
      r.value = kl_bound(epsilon, c, n, delta);
      break;
    case DivergenceSpec::Kind::kHellingerSq:
      r.value = hellinger_bound(epsilon, c, n, delta);
      break;
    default:
      r.value = binette_bound(spec, epsilon, c, n, delta);
      break;
  }
  return r;
}

BoundReport report_kairouz(double epsilon) {
  BoundReport r;
  r.value = kairouz_eta_bound(epsilon);
  r.regime = regime_of(r.value);
  r.components["epsilon"] = epsilon;
  return r;
}

BoundReport report_duchi(double epsilon, double tv_delta) {
  BoundReport r;
  r.value = duchi_kl_bound(epsilon, tv_delta);
  r.regime = Regime::kContractive;
  r.components["epsilon"] = epsilon;
  r.components["delta"] = tv_delta;
  return r;
}

BoundReport report_asoodeh(double epsilon) {
  BoundReport r;
  r.value = asoodeh_eta_kl_bound(epsilon);
  r.regime = regime_of(kairouz_eta_bound(epsilon));
  r.components["epsilon"] = epsilon;
  return r;
}

BoundReport report_minimax(long n_samples, double epsilon, double c,
                           std::size_t n, double delta) {
  BoundReport r = base_report(epsilon, c, n);
  r.value = minimax_lower_bound(n_samples, epsilon, c, n, delta);
  r.components["n"] = static_cast<double>(n_samples);
  r.components["delta"] = delta;
  return r;
}

BoundReport report_sample_complexity(double epsilon, double c, std::size_t n,
                                     double delta, double target_risk) {
  BoundReport r = base_report(epsilon, c, n);
  const long count = sample_complexity(epsilon, c, n, delta, target_risk);
  r.value = static_cast<double>(count);
  r.components["delta"] = delta;
  r.components["target_risk"] = target_risk;
  return r;
}

}  // namespace pmlc

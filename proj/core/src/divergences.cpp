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

#include "pmlcontract/divergences.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace pmlc {

namespace {

void check_dims(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("divergence of distributions with sizes " +
                            std::to_string(p.size()) + " and " +
                            std::to_string(q.size()));
  }
}

bool zero(double mass) { return mass <= kZeroMass; }

}  // namespace

DivergenceSpec DivergenceSpec::generic(GenericGenerator gen) {
  if (!gen.f) throw GeneratorError("generator function is empty");
  const double at_one = gen.f(1.0);
  if (!(std::abs(at_one) <= 1e-12)) {
    throw GeneratorError("generator must vanish at 1, got f(1) = " +
                         std::to_string(at_one));
  }
  DivergenceSpec spec(Kind::kGeneric);
  spec.gen_ = std::move(gen);
  return spec;
}

double DivergenceSpec::generator_value(double t) const {
  switch (kind_) {
    case Kind::kTv:
      return 0.5 * std::abs(t - 1.0);
    case Kind::kKl:
      return t <= 0.0 ? 0.0 : t * std::log(t);
    case Kind::kHellingerSq: {
      const double d = 1.0 - std::sqrt(t);
      return d * d;
    }
    case Kind::kChiSq: {
      const double d = t - 1.0;
      return d * d;
    }
    case Kind::kGeneric:
      return gen_.f(t);
  }
  return 0.0;
}

double tv(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

double tv(const Distribution& p, const Distribution& q) {
  check_dims(p, q);
  return tv(p.span(), q.span());
}

ExtendedReal kl(const Distribution& p, const Distribution& q) {
  check_dims(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (zero(p[i])) continue;  // 0 log 0 = 0
    if (zero(q[i])) return ExtendedReal::infinity();
    sum += p[i] * std::log(p[i] / q[i]);
  }
  return ExtendedReal::finite(sum);
}

double hellinger_sq(const Distribution& p, const Distribution& q) {
  check_dims(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    sum += d * d;
  }
  return sum;
}

ExtendedReal chi_sq(const Distribution& p, const Distribution& q) {
  check_dims(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (zero(q[i])) {
      if (zero(p[i])) continue;
      return ExtendedReal::infinity();
    }
    const double d = p[i] - q[i];
    sum += d * d / q[i];
  }
  return ExtendedReal::finite(sum);
}

ExtendedReal f_div(const DivergenceSpec& spec, const Distribution& p,
                   const Distribution& q) {
  switch (spec.kind()) {
    case DivergenceSpec::Kind::kTv:
      return ExtendedReal::finite(tv(p, q));
    case DivergenceSpec::Kind::kKl:
      return kl(p, q);
    case DivergenceSpec::Kind::kHellingerSq:
      return ExtendedReal::finite(hellinger_sq(p, q));
    case DivergenceSpec::Kind::kChiSq:
      return chi_sq(p, q);
    case DivergenceSpec::Kind::kGeneric:
      break;
  }
  check_dims(p, q);
  const GenericGenerator& gen = spec.generator();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (zero(q[i])) {
      if (zero(p[i])) continue;
      // q(x) = 0 < p(x): the term is p(x) times the slope of f at infinity.
      if (gen.slope_at_infinity.is_infinite()) return ExtendedReal::infinity();
      sum += p[i] * gen.slope_at_infinity.value();
    } else if (zero(p[i])) {
      if (gen.limit_at_zero.is_infinite()) return ExtendedReal::infinity();
      sum += q[i] * gen.limit_at_zero.value();
    } else {
      sum += q[i] * gen.f(p[i] / q[i]);
    }
  }
  return ExtendedReal::finite(sum);
}

}  // namespace pmlc

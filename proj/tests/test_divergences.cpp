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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pmlcontract/contraction.hpp"
#include "pmlcontract/divergences.hpp"
#include "pmlcontract/random.hpp"

using namespace pmlc;

namespace {

// Frozen by hand: 2 - 2*(sqrt(0.45) + sqrt(0.05)).
constexpr double kHellingerExample = 0.21114561800016823;

std::vector<DivergenceSpec> builtin_specs() {
  return {DivergenceSpec::total_variation(), DivergenceSpec::kl(),
          DivergenceSpec::hellinger_sq(), DivergenceSpec::chi_sq()};
}

}  // namespace

TEST_CASE("total variation") {
  const Distribution p({0.7, 0.3});
  CHECK(tv(p, p) == 0.0);
  CHECK(tv(Distribution({1.0, 0.0}), Distribution({0.0, 1.0})) == 1.0);
  CHECK(tv(p, Distribution({0.4, 0.6})) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(tv(p, Distribution({0.2, 0.3, 0.5})), DimensionMismatch);
}

TEST_CASE("relative entropy") {
  const Distribution p({0.5, 0.5});
  CHECK(kl(p, p) == ExtendedReal::finite(0.0));
  const auto one_term = kl(Distribution({1.0, 0.0}), p);
  REQUIRE(one_term.is_finite());
  CHECK(one_term.value() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(kl(p, Distribution({1.0, 0.0})).is_infinite());
  CHECK_THROWS_AS(kl(p, Distribution({0.2, 0.3, 0.5})), DimensionMismatch);
}

TEST_CASE("squared Hellinger") {
  const Distribution p({0.5, 0.5});
  CHECK(hellinger_sq(p, p) == 0.0);
  CHECK(hellinger_sq(Distribution({1.0, 0.0}), Distribution({0.0, 1.0})) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hellinger_sq(p, Distribution({0.9, 0.1})) ==
        doctest::Approx(kHellingerExample).epsilon(1e-12));
}

TEST_CASE("chi squared") {
  const Distribution p({0.75, 0.25});
  const Distribution q({0.5, 0.5});
  CHECK(chi_sq(q, q) == ExtendedReal::finite(0.0));
  const auto v = chi_sq(p, q);
  REQUIRE(v.is_finite());
  CHECK(v.value() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(chi_sq(q, Distribution({0.0, 1.0})).is_infinite());
}

TEST_CASE("generic evaluator matches the dedicated forms") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.next_u64() % 4;
    const auto p = testing::random_distribution(rng, n);
    const auto q = testing::random_distribution(rng, n);
    const auto direct_tv = tv(p, q);
    const auto via_spec = f_div(DivergenceSpec::total_variation(), p, q);
    REQUIRE(via_spec.is_finite());
    CHECK(via_spec.value() == doctest::Approx(direct_tv).epsilon(1e-12));

    const auto direct_kl = kl(p, q);
    const auto kl_spec = f_div(DivergenceSpec::kl(), p, q);
    CHECK(direct_kl.is_finite() == kl_spec.is_finite());
    if (direct_kl.is_finite()) {
      CHECK(kl_spec.value() ==
            doctest::Approx(direct_kl.value()).epsilon(1e-12));
    }

    const auto h2_spec = f_div(DivergenceSpec::hellinger_sq(), p, q);
    REQUIRE(h2_spec.is_finite());
    CHECK(h2_spec.value() ==
          doctest::Approx(hellinger_sq(p, q)).epsilon(1e-12));

    const auto chi_spec = f_div(DivergenceSpec::chi_sq(), p, q);
    const auto direct_chi = chi_sq(p, q);
    CHECK(chi_spec.is_finite() == direct_chi.is_finite());
    if (direct_chi.is_finite()) {
      CHECK(chi_spec.value() ==
            doctest::Approx(direct_chi.value()).epsilon(1e-12));
    }
  }
}

TEST_CASE("generic generator with declared limits") {
  GenericGenerator gen;
  gen.f = [](double t) {
    const double s = std::sqrt(t) - 1.0;
    return s * s;
  };
  gen.limit_at_zero = ExtendedReal::finite(1.0);
  gen.slope_at_infinity = ExtendedReal::finite(1.0);
  const auto spec = DivergenceSpec::generic(gen);

  const auto disjoint =
      f_div(spec, Distribution({1.0, 0.0}), Distribution({0.0, 1.0}));
  REQUIRE(disjoint.is_finite());
  CHECK(disjoint.value() == doctest::Approx(2.0).epsilon(1e-12));

  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = testing::random_distribution(rng, 4);
    const auto q = testing::random_distribution(rng, 4);
    const auto generic = f_div(spec, p, q);
    REQUIRE(generic.is_finite());
    CHECK(generic.value() ==
          doctest::Approx(hellinger_sq(p, q)).epsilon(1e-12));
  }
}

TEST_CASE("generator contract is checked at one") {
  GenericGenerator bad;
  bad.f = [](double t) { return t; };
  CHECK_THROWS_AS(DivergenceSpec::generic(bad), GeneratorError);
}

TEST_CASE("nonnegativity and identity of indiscernibles") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng.next_u64() % 5;
    const auto p = testing::random_distribution(rng, n);
    const auto q = testing::random_distribution(rng, n);
    for (const auto& spec : builtin_specs()) {
      const auto same = f_div(spec, p, p);
      REQUIRE(same.is_finite());
      CHECK(same.value() == doctest::Approx(0.0).epsilon(1e-12));
      const auto cross = f_div(spec, p, q);
      if (cross.is_finite()) CHECK(cross.value() >= -1e-12);
    }
  }
}

TEST_CASE("data processing inequality") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng.next_u64() % 4;
    const std::size_t m = 2 + rng.next_u64() % 4;
    const auto k = testing::random_kernel(rng, n, m);
    const auto p = testing::random_distribution(rng, n);
    const auto q = testing::random_distribution(rng, n);
    const auto kp = push_forward(k, p);
    const auto kq = push_forward(k, q);
    for (const auto& spec : builtin_specs()) {
      const auto in = f_div(spec, p, q);
      const auto out = f_div(spec, kp, kq);
      if (!in.is_finite()) continue;
      REQUIRE(out.is_finite());
      CHECK(out.value() <= in.value() + 1e-12);
    }
  }
}

TEST_CASE("pairwise row distance caps every sampled tv ratio") {
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    const auto k = testing::random_kernel(rng, 3, 4);
    const double cap = dobrushin(k);
    for (int j = 0; j < 20; ++j) {
      const auto p = testing::random_distribution(rng, 3);
      const auto q = testing::random_distribution(rng, 3);
      const double in = tv(p, q);
      if (in < 1e-9) continue;
      const double out = tv(push_forward(k, p), push_forward(k, q));
      CHECK(out <= cap * in + 1e-12);
    }
  }
}

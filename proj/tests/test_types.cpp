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
#include "pmlcontract/random.hpp"
#include "pmlcontract/types.hpp"

using namespace pmlc;

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(Distribution({1.0}), DomainError);
  CHECK_THROWS_AS(Distribution({0.5, 0.6, -0.1}), NegativeEntryError);
  CHECK_THROWS_AS(Distribution({0.5, 0.4}), RowSumError);
  CHECK_NOTHROW(Distribution({0.5, 0.5}));
  // Within the stochasticity tolerance.
  CHECK_NOTHROW(Distribution({0.5, 0.5 + 5e-10}));
}

TEST_CASE("distribution accessors") {
  const auto u = Distribution::uniform(4);
  CHECK(u.size() == 4);
  CHECK(u[0] == 0.25);
  CHECK(u.min_mass() == 0.25);
  CHECK(u.full_support());

  const Distribution p({0.0, 1.0});
  CHECK_FALSE(p.full_support());
  CHECK(p.min_mass() == 0.0);
  CHECK(p == Distribution({0.0, 1.0}));
}

TEST_CASE("kernel validation") {
  CHECK_THROWS_AS(
      StochasticKernel(std::vector<std::vector<double>>{{1.0}}), DomainError);
  CHECK_THROWS_AS(StochasticKernel({{0.5, 0.5}, {0.3, 0.3, 0.4}}),
                  DimensionMismatch);
  CHECK_THROWS_AS(StochasticKernel({{1.5, -0.5}, {0.5, 0.5}}),
                  NegativeEntryError);
  CHECK_THROWS_AS(StochasticKernel({{0.7, 0.2}, {0.5, 0.5}}), RowSumError);
  CHECK_THROWS_AS(StochasticKernel({{1.0, 0.0}, {1.0, 0.0}}),
                  DeadColumnError);
  CHECK_NOTHROW(StochasticKernel({{1.0, 0.0}, {1.0, 0.0}},
                                 ColumnPolicy::kAllowDeadColumns));

  const StochasticKernel k({{0.9, 0.1}, {0.2, 0.8}});
  CHECK(k.inputs() == 2);
  CHECK(k.outputs() == 2);
  CHECK(k(0, 1) == 0.1);
  CHECK(k.row_distribution(1)[0] == 0.2);
  CHECK_NOTHROW(validate_kernel({{0.9, 0.1}, {0.2, 0.8}}));
}

TEST_CASE("push_forward marginals") {
  const StochasticKernel id({{1.0, 0.0}, {0.0, 1.0}},
                            ColumnPolicy::kRejectDeadColumns);
  const Distribution p({0.3, 0.7});
  const auto out = push_forward(id, p);
  CHECK(out[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(out[1] == doctest::Approx(0.7).epsilon(1e-15));

  const StochasticKernel constant({{0.4, 0.6}, {0.4, 0.6}, {0.4, 0.6}});
  const auto cm = push_forward(constant, Distribution({0.2, 0.5, 0.3}));
  CHECK(cm[0] == doctest::Approx(0.4).epsilon(1e-15));

  CHECK_THROWS_AS(push_forward(id, Distribution({0.2, 0.5, 0.3})),
                  DimensionMismatch);
}

TEST_CASE("push_forward stays on the simplex") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng.next_u64() % 5;
    const std::size_t m = 2 + rng.next_u64() % 5;
    const auto k = testing::random_kernel(rng, n, m);
    const auto p = testing::random_distribution(rng, n);
    const auto out = push_forward(k, p);
    double total = 0.0;
    for (std::size_t y = 0; y < m; ++y) {
      CHECK(out[y] >= 0.0);
      total += out[y];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("min-mass membership") {
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(in_credal_set(Distribution::uniform(n), 1.0 / double(n)));
  }
  CHECK(in_credal_set(Distribution({0.2, 0.8}), 0.2));
  CHECK_FALSE(in_credal_set(Distribution({0.1, 0.9}), 0.2));
  CHECK_THROWS_AS(in_credal_set(Distribution({0.5, 0.5}), 0.0), DomainError);
  CHECK_THROWS_AS(in_credal_set(Distribution({0.5, 0.5}), 0.6), DomainError);
}

TEST_CASE("credal set construction and degeneracy") {
  CHECK_THROWS_AS(CredalSet(0.0, 4), DomainError);
  CHECK_THROWS_AS(CredalSet(-0.1, 4), DomainError);
  CHECK_THROWS_AS(CredalSet(0.3, 4), DomainError);
  CHECK(CredalSet(0.25, 4).degenerate());
  CHECK_FALSE(CredalSet(0.1, 4).degenerate());

  const CredalSet set(0.1, 4);
  CHECK(set.contains(Distribution::uniform(4)));
  CHECK_FALSE(set.contains(Distribution({0.05, 0.05, 0.2, 0.7})));
}

TEST_CASE("embed lands inside the set") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng.next_u64() % 5;
    const double c = (0.2 + 0.7 * rng.uniform()) / double(n);
    const CredalSet set(c, n);
    const auto image = set.embed(testing::random_distribution(rng, n));
    CHECK(set.contains(image));
  }
  // The parameterization fixes the uniform point.
  const CredalSet set(0.1, 5);
  const auto u = set.embed(Distribution::uniform(5));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(u[i] == doctest::Approx(0.2).epsilon(1e-15));
  }
}

TEST_CASE("budget validation") {
  CHECK_NOTHROW(PrivacyBudget{0.5, 0.1}.validate_for(5));
  CHECK_THROWS_AS((PrivacyBudget{-0.1, 0.1}.validate_for(5)), DomainError);
  CHECK_THROWS_AS((PrivacyBudget{0.5, 0.0}.validate_for(5)), DomainError);
  CHECK_THROWS_AS((PrivacyBudget{0.5, 0.21}.validate_for(5)), DomainError);
}

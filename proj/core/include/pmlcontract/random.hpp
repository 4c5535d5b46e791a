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

#include <cmath>
#include <cstdint>
#include <vector>

namespace pmlc {

// splitmix64. Chosen over std::mt19937 because the stream is fully specified
// here: experiment outputs must be byte-identical across platforms and
// standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Exponential(1) via inversion; finite for every draw.
  double exponential() {
    // 1 - uniform() lies in (0, 1].
    return -std::log(1.0 - uniform());
  }

 private:
  std::uint64_t state_;
};

// Stream for the index-th independent subtask of a seeded computation.
// Derived streams let sample loops run in any order (or in parallel) without
// changing results.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(seed ^ index);
}

// Uniform draw from the probability simplex (normalized iid exponentials).
inline std::vector<double> sample_simplex(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) {
    x = rng.exponential();
    total += x;
  }
  if (total <= 0.0) {
    for (auto& x : v) x = 1.0 / static_cast<double>(n);
    return v;
  }
  for (auto& x : v) x /= total;
  return v;
}

}  // namespace pmlc

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

#include "pmlcontract/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "pmlcontract/leakage.hpp"
#include "pmlcontract/random.hpp"

namespace pmlc {

namespace {

constexpr double kPairTvFloor = 1e-6;  // excludes the 0/0 ratio at p = q
constexpr double kVertexSmoothing = 1e-3;

void check_search(const SearchConfig& config) {
  if (config.restarts < 1) {
    throw SearchConfigError("search needs at least one restart");
  }
  if (config.refine_rounds < 0) {
    throw SearchConfigError("refinement rounds must be >= 0");
  }
}

std::vector<double> smoothed_vertex(std::size_t n, std::size_t at) {
  std::vector<double> v(n, kVertexSmoothing / static_cast<double>(n));
  v[at] += 1.0 - kVertexSmoothing;
  return v;
}

std::vector<double> mix_toward(const std::vector<double>& v, std::size_t coord,
                               double t) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (1.0 - t) * v[i];
  out[coord] += t;
  return out;
}

// Maps free simplex coordinates to the search space: identity, or the
// min-mass embedding when the pair is restricted.
Distribution realize(const std::vector<double>& v,
                     const std::optional<CredalSet>& set) {
  Distribution d{std::vector<double>(v)};
  return set ? set->embed(d) : d;
}

double ratio_or_negative(const StochasticKernel& k, const DivergenceSpec& spec,
                         const Distribution& p, const Distribution& q) {
  if (tv(p, q) < kPairTvFloor) return -1.0;
  const ExtendedReal den = f_div(spec, p, q);
  if (den.is_infinite() || den.value() <= 0.0) return -1.0;
  const ExtendedReal num = f_div(spec, push_forward(k, p), push_forward(k, q));
  if (num.is_infinite()) return -1.0;
  return num.value() / den.value();
}

// Second-largest squared singular value of B(x, y) = sqrt(p(x)) k(y|x) /
// sqrt(marginal(y)), via power iteration on the smaller Gram matrix with the
// known top eigenvector (value 1) deflated. The Rayleigh quotient of the
// deflated matrix never exceeds the true second eigenvalue, so the estimate
// approaches it from below.
double second_singular_sq(const StochasticKernel& k, const Distribution& p,
                          Rng& rng, long& iterations) {
  const std::size_t n = k.inputs();
  const Distribution marginal = push_forward(k, p);
  std::vector<std::size_t> live;
  for (std::size_t y = 0; y < k.outputs(); ++y) {
    if (marginal[y] > kZeroMass) live.push_back(y);
  }
  const std::size_t m = live.size();
  std::vector<double> b(n * m);
  for (std::size_t x = 0; x < n; ++x) {
    const double sp = std::sqrt(p[x]);
    for (std::size_t j = 0; j < m; ++j) {
      b[x * m + j] = sp * k(x, live[j]) / std::sqrt(marginal[live[j]]);
    }
  }

  // Gram matrix on the shorter side, plus its unit-norm top eigenvector.
  const bool row_side = n <= m;
  const std::size_t d = row_side ? n : m;
  std::vector<double> gram(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double dot = 0.0;
      if (row_side) {
        for (std::size_t t = 0; t < m; ++t) dot += b[i * m + t] * b[j * m + t];
      } else {
        for (std::size_t t = 0; t < n; ++t) dot += b[t * m + i] * b[t * m + j];
      }
      gram[i * d + j] = gram[j * d + i] = dot;
    }
  }
  std::vector<double> top(d);
  double top_norm = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    top[i] = std::sqrt(row_side ? p[i] : marginal[live[i]]);
    top_norm += top[i] * top[i];
  }
  top_norm = std::sqrt(top_norm);
  for (auto& t : top) t /= top_norm;

  auto deflate = [&](std::vector<double>& v) {
    double dot = 0.0;
    for (std::size_t i = 0; i < d; ++i) dot += v[i] * top[i];
    for (std::size_t i = 0; i < d; ++i) v[i] -= dot * top[i];
  };

  std::vector<double> x(d);
  for (auto& xi : x) xi = rng.uniform() - 0.5;
  deflate(x);

  double lambda = 0.0;
  std::vector<double> y(d);
  for (int it = 0; it < 10000; ++it) {
    ++iterations;
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += x[i] * x[i];
    norm = std::sqrt(norm);
    if (norm < 1e-14) return 0.0;  // spectrum below the top is empty
    for (auto& xi : x) xi /= norm;
    for (std::size_t i = 0; i < d; ++i) {
      double dot = 0.0;
      for (std::size_t j = 0; j < d; ++j) dot += gram[i * d + j] * x[j];
      y[i] = dot;
    }
    deflate(y);
    double next = 0.0;
    for (std::size_t i = 0; i < d; ++i) next += x[i] * y[i];
    x.swap(y);
    if (std::abs(next - lambda) <= 1e-10) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::clamp(lambda, 0.0, 1.0);
}

}  // namespace

double dobrushin(const StochasticKernel& k) {
  double best = 0.0;
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    for (std::size_t x2 = x + 1; x2 < k.inputs(); ++x2) {
      best = std::max(best, tv(k.row(x), k.row(x2)));
    }
  }
  return best;
}

StochasticKernel binarize(const StochasticKernel& k, const Distribution& p,
                          const Distribution& q) {
  const Distribution mp = push_forward(k, p);
  const Distribution mq = push_forward(k, q);
  std::vector<std::vector<double>> rows(k.inputs());
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    double w = 0.0;
    for (std::size_t y = 0; y < k.outputs(); ++y) {
      if (mp[y] > mq[y]) w += k(x, y);
    }
    w = std::clamp(w, 0.0, 1.0);
    rows[x] = {w, 1.0 - w};
  }
  // The collapse of coinciding marginals is the constant kernel (0, 1),
  // whose first column is dead; that is still the correct two-column
  // post-processing, so dead columns are permitted here.
  return StochasticKernel(std::move(rows), ColumnPolicy::kAllowDeadColumns);
}

ContractionEstimate empirical_eta_f(const StochasticKernel& k,
                                    const DivergenceSpec& spec,
                                    std::optional<double> min_mass,
                                    const SearchConfig& config) {
  check_search(config);
  const std::size_t n = k.inputs();
  std::optional<CredalSet> set;
  if (min_mass) set.emplace(*min_mass, n);

  const double cap = dobrushin(k);
  long iterations = 0;

  double best = -1.0;
  std::vector<double> best_vp;
  std::vector<double> best_vq;

  // Ordered input pairs for the vertex-seeded share of the restarts; the TV
  // optimum sits at simplex vertices, which Dirichlet draws reach slowly.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      if (a != b2) pairs.emplace_back(a, b2);
    }
  }
  std::size_t pair_cursor = 0;

  for (int r = 0; r < config.restarts; ++r) {
    Rng rng = derived_rng(config.seed, static_cast<std::uint64_t>(r));
    std::vector<double> vp;
    std::vector<double> vq;
    if (r % 10 < 3) {
      const auto [a, b2] = pairs[pair_cursor++ % pairs.size()];
      vp = smoothed_vertex(n, a);
      vq = smoothed_vertex(n, b2);
    } else {
      vp = sample_simplex(rng, n);
      vq = sample_simplex(rng, n);
    }
    ++iterations;
    const Distribution p = realize(vp, set);
    const Distribution q = realize(vq, set);
    const double ratio = ratio_or_negative(k, spec, p, q);
    if (ratio > best) {
      best = ratio;
      best_vp = vp;
      best_vq = vq;
    }
  }

  if (best < 0.0) {
    // No admissible pair (the restricted set can be a single point).
    const Distribution u = set ? set->embed(Distribution::uniform(n))
                               : Distribution::uniform(n);
    return {0.0, u, u, cap, iterations};
  }

  // Per-coordinate mixture ascent with step halving, in free coordinates so
  // restricted pairs stay feasible.
  double step = 0.5;
  for (int round = 0; round < config.refine_rounds; ++round) {
    bool improved = false;
    for (int side = 0; side < 2; ++side) {
      std::vector<double>& v = side == 0 ? best_vp : best_vq;
      for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double> trial = mix_toward(v, i, step);
        ++iterations;
        const double ratio =
            side == 0
                ? ratio_or_negative(k, spec, realize(trial, set),
                                    realize(best_vq, set))
                : ratio_or_negative(k, spec, realize(best_vp, set),
                                    realize(trial, set));
        if (ratio > best) {
          best = ratio;
          v = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  // The TV coefficient dominates every f-divergence contraction, so a
  // measured ratio above it by more than rounding noise means the search or
  // the closed form is broken. Within noise, the cap is the sharper value.
  if (best > cap + 1e-9) {
    throw SoundnessAlarm("contraction search found ratio " +
                         std::to_string(best) + " above the TV cap " +
                         std::to_string(cap));
  }
  return {std::clamp(best, 0.0, cap), realize(best_vp, set),
          realize(best_vq, set), cap, iterations};
}

ContractionEstimate eta_chi2(const StochasticKernel& k,
                             const SearchConfig& config) {
  check_search(config);
  const std::size_t n = k.inputs();
  const double cap = dobrushin(k);
  long iterations = 0;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b2 = a + 1; b2 < n; ++b2) pairs.emplace_back(a, b2);
  }
  std::size_t pair_cursor = 0;

  double best = -1.0;
  std::vector<double> best_p;

  for (int r = 0; r < config.restarts; ++r) {
    Rng rng = derived_rng(config.seed, static_cast<std::uint64_t>(r));
    std::vector<double> cand;
    if (r == 0) {
      cand.assign(n, 1.0 / static_cast<double>(n));
    } else if (r % 10 < 3) {
      // Mass split across one input pair: correlation concentrates on the
      // pair, which is where disjoint-support kernels reach 1.
      const auto [a, b2] = pairs[pair_cursor++ % pairs.size()];
      cand.assign(n, kVertexSmoothing / static_cast<double>(n));
      const double half = (1.0 - kVertexSmoothing) / 2.0;
      cand[a] += half;
      cand[b2] += half;
    } else {
      cand = sample_simplex(rng, n);
    }
    const double value =
        second_singular_sq(k, Distribution{std::vector<double>(cand)}, rng,
                           iterations);
    if (value > best) {
      best = value;
      best_p = cand;
    }
  }

  Rng refine_rng = derived_rng(config.seed, 0x9e3779b97f4a7c15ULL);
  double step = 0.5;
  for (int round = 0; round < config.refine_rounds; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::vector<double> trial = mix_toward(best_p, i, step);
      const double value = second_singular_sq(
          k, Distribution{std::vector<double>(trial)}, refine_rng, iterations);
      if (value > best) {
        best = value;
        best_p = trial;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }

  if (best > cap + 1e-9) {
    throw SoundnessAlarm("squared-correlation search found " +
                         std::to_string(best) + " above the TV cap " +
                         std::to_string(cap));
  }
  Distribution witness{std::vector<double>(best_p)};
  return {std::clamp(best, 0.0, cap), witness, witness, cap, iterations};
}

std::optional<std::pair<std::size_t, std::size_t>> is_decomposable(
    const StochasticKernel& k) {
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    for (std::size_t x2 = x + 1; x2 < k.inputs(); ++x2) {
      bool overlap = false;
      for (std::size_t y = 0; y < k.outputs() && !overlap; ++y) {
        overlap = k(x, y) > kZeroMass && k(x2, y) > kZeroMass;
      }
      if (!overlap) return std::make_pair(x, x2);
    }
  }
  return std::nullopt;
}

double brute_force_eta_tv(const StochasticKernel& k, double grid_step) {
  if (k.inputs() > 4) {
    throw SizeError("exhaustive grid oracle is limited to 4 inputs");
  }
  if (!(grid_step >= 1e-3 && grid_step <= 0.1)) {
    throw DomainError("grid step must lie in [1e-3, 0.1]");
  }
  const std::size_t n = k.inputs();
  const std::size_t m = k.outputs();
  const long r = std::lround(1.0 / grid_step);

  // All grid points k/r of the simplex, with their output marginals.
  std::vector<std::vector<double>> points;
  std::vector<double> current(n, 0.0);
  auto emit = [&](auto&& self, std::size_t at, long remaining) -> void {
    if (at + 1 == n) {
      current[at] = static_cast<double>(remaining) / static_cast<double>(r);
      points.push_back(current);
      return;
    }
    for (long t = 0; t <= remaining; ++t) {
      current[at] = static_cast<double>(t) / static_cast<double>(r);
      self(self, at + 1, remaining - t);
    }
  };
  emit(emit, 0, r);

  const std::size_t count = points.size();
  std::vector<double> marginals(count * m, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      const double w = points[i][x];
      if (w == 0.0) continue;
      auto row = k.row(x);
      for (std::size_t y = 0; y < m; ++y) marginals[i * m + y] += w * row[y];
    }
  }

  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      double tv_in = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        tv_in += std::abs(points[i][x] - points[j][x]);
      }
      double tv_out = 0.0;
      for (std::size_t y = 0; y < m; ++y) {
        tv_out += std::abs(marginals[i * m + y] - marginals[j * m + y]);
      }
      if (tv_in > 0.0) best = std::max(best, tv_out / tv_in);
    }
  }
  return best;
}

}  // namespace pmlc

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

#include "pmlcontract/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pmlcontract/bounds.hpp"
#include "pmlcontract/contraction.hpp"
#include "pmlcontract/divergences.hpp"
#include "pmlcontract/io.hpp"
#include "pmlcontract/leakage.hpp"
#include "pmlcontract/mechanisms.hpp"
#include "pmlcontract/random.hpp"
#include "pmlcontract/types.hpp"

namespace pmlc {

namespace {

std::string finish(const ExperimentConfig& config, std::string text) {
  if (!config.output_path.empty()) write_text_file(config.output_path, text);
  return text;
}

double get_double(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key + " must be a number");
  return v.get<double>();
}

long get_long(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError(key + " must be an integer");
  return v.get<long>();
}

std::uint64_t get_seed(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) {
    return static_cast<std::uint64_t>(v.get<long long>());
  }
  throw ConfigError("seed must be a nonnegative integer");
}

std::vector<double> get_double_list(const nlohmann::json& v,
                                    const std::string& key) {
  if (!v.is_array()) throw ConfigError(key + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(get_double(e, key + " entry"));
  return out;
}

std::vector<long> get_long_list(const nlohmann::json& v,
                                const std::string& key) {
  if (!v.is_array()) throw ConfigError(key + " must be an array of integers");
  std::vector<long> out;
  for (const auto& e : v) out.push_back(get_long(e, key + " entry"));
  return out;
}

void apply_parameter(ExperimentConfig& config, const std::string& key,
                     const nlohmann::json& v) {
  if (key == "kernel") {
    if (!v.is_string()) throw ConfigError("kernel must be a string");
    config.kernel = v.get<std::string>();
  } else if (key == "c") {
    config.c = get_double(v, key);
  } else if (key == "epsilon" || key == "eps") {
    if (config.epsilon >= 0.0) {
      throw ConfigError("epsilon given twice (eps and epsilon)");
    }
    config.epsilon = get_double(v, key);
  } else if (key == "n") {
    config.n = get_long(v, key);
  } else if (key == "m") {
    config.m = get_long(v, key);
  } else if (key == "n_max") {
    config.n_max = get_long(v, key);
  } else if (key == "c_list") {
    config.c_list = get_double_list(v, key);
  } else if (key == "eps_list") {
    config.eps_list = get_double_list(v, key);
  } else if (key == "n_list") {
    config.n_list = get_long_list(v, key);
  } else if (key == "delta_list") {
    config.delta_list = get_double_list(v, key);
  } else if (key == "n_obs") {
    config.n_obs = get_long(v, key);
  } else if (key == "target_risk") {
    config.target_risk = get_double(v, key);
  } else {
    throw ConfigError("unknown parameter \"" + key + "\"");
  }
}

// CSV helpers: every float rendered with format_full so output is
// byte-stable; rows always end with \n.
void csv_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

std::string fmt(double v) { return format_full(v); }

}  // namespace

ExperimentKind experiment_kind_from_string(const std::string& s) {
  if (s == "figure1") return ExperimentKind::kFigure1;
  if (s == "m0-search") return ExperimentKind::kM0Search;
  if (s == "lemma4-check") return ExperimentKind::kLemma4Check;
  if (s == "theorem3-grid") return ExperimentKind::kTheorem3Grid;
  if (s == "minimax-table") return ExperimentKind::kMinimaxTable;
  throw ConfigError("unknown experiment kind \"" + s +
                    "\"; expected figure1, m0-search, lemma4-check, "
                    "theorem3-grid, or minimax-table");
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kFigure1:
      return "figure1";
    case ExperimentKind::kM0Search:
      return "m0-search";
    case ExperimentKind::kLemma4Check:
      return "lemma4-check";
    case ExperimentKind::kTheorem3Grid:
      return "theorem3-grid";
    case ExperimentKind::kMinimaxTable:
      return "minimax-table";
  }
  throw ConfigError("unhandled experiment kind");
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded()) {
    throw IoError("experiment config is not valid JSON");
  }
  if (!j.is_object()) {
    throw ConfigError("experiment config must be a JSON object");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("experiment config needs a string \"kind\"");
  }
  ExperimentConfig config;
  config.kind = experiment_kind_from_string(j["kind"].get<std::string>());
  for (const auto& [key, v] : j.items()) {
    if (key == "kind") continue;
    if (key == "seed") {
      config.seed = get_seed(v);
    } else if (key == "samples") {
      config.samples = get_long(v, key);
      if (config.samples < 0) throw ConfigError("samples must be >= 0");
    } else if (key == "output_path") {
      if (!v.is_string()) throw ConfigError("output_path must be a string");
      config.output_path = v.get<std::string>();
    } else if (key == "tolerance") {
      config.tolerance = get_double(v, key);
      if (!(config.tolerance > 0.0)) {
        throw ConfigError("tolerance must be > 0");
      }
    } else if (key == "parameters") {
      if (!v.is_object()) throw ConfigError("parameters must be an object");
      for (const auto& [pk, pv] : v.items()) {
        apply_parameter(config, pk, pv);
      }
    } else {
      throw ConfigError("unknown config field \"" + key + "\"");
    }
  }
  return config;
}

ExperimentConfig read_experiment_config(const std::string& path) {
  return parse_experiment_config(read_text_file(path));
}

std::string run_figure1(const ExperimentConfig& config) {
  const long samples = config.samples < 0 ? 1000 : config.samples;

  std::optional<StochasticKernel> kernel;
  double c = config.c;
  if (config.kernel == "K1") {
    kernel = reference_kernels().k1;
    if (c < 0.0) c = 0.05;
  } else if (config.kernel == "K2") {
    kernel = reference_kernels().k2;
    if (c < 0.0) c = 0.1;
  } else {
    kernel = read_kernel(config.kernel);
    if (c < 0.0) {
      throw ConfigError("c is required when the kernel comes from a file");
    }
  }
  const StochasticKernel& k = *kernel;
  const std::size_t n = k.inputs();
  const CredalSet set(c, n);
  const double eps =
      config.epsilon >= 0.0 ? config.epsilon : leakage_capacity(k, c);
  if (!satisfies_pml(k, {eps, c})) {
    throw ConfigError(
        "kernel leaks more than the stated budget; the bound columns would "
        "be vacuous (capacity " +
        fmt(leakage_capacity(k, c)) + " > epsilon " + fmt(eps) + ")");
  }

  const ExtendedReal ldp_level = ldp(k);
  const bool baselines = ldp_level.is_finite();

  const double xi_slope = xi(eps, c, n);
  const double kl_slope = kl_bound(eps, c, n, 1.0);
  const double h2_slope = hellinger_bound(eps, c, n, 1.0);
  const double duchi_slope =
      baselines ? duchi_kl_bound(ldp_level.value(), 1.0) : 0.0;
  const double kairouz_slope =
      baselines ? kairouz_eta_bound(ldp_level.value()) : 0.0;

  std::ostringstream out;
  out << "# kind: figure1\n";
  out << "# kernel: " << config.kernel << "\n";
  out << "# n: " << n << "\n";
  out << "# c: " << fmt(c) << "\n";
  out << "# epsilon: " << fmt(eps) << "\n";
  out << "# ldp: " << to_string(ldp_level) << "\n";
  out << "# seed: " << config.seed << "\n";
  out << "# samples: " << samples << "\n";
  out << "# sampling: V ~ Dirichlet(1) on the free simplex, prior = c + "
         "(1 - n c) V per coordinate; the min-mass set's exact sampling law "
         "is a choice, recorded here\n";
  out << "# provenance: kl_bound/hellinger_bound/xi_tv_bound from the "
         "min-mass leakage cap at (epsilon, c)";
  if (baselines) {
    out << "; duchi_kl_bound/kairouz_tv_bound are external baselines at the "
           "kernel's own ldp level";
  }
  out << "\n";

  std::vector<std::string> header = {"sample",   "tv_in",  "tv_out",
                                     "kl_out",   "kl_bound", "h2_out",
                                     "h2_bound", "xi_tv_bound"};
  if (baselines) {
    header.push_back("duchi_kl_bound");
    header.push_back("kairouz_tv_bound");
  }
  csv_row(out, header);

  for (long s = 0; s < samples; ++s) {
    Rng rng = derived_rng(config.seed, static_cast<std::uint64_t>(s));
    const Distribution p = set.embed(Distribution(sample_simplex(rng, n)));
    const Distribution q = set.embed(Distribution(sample_simplex(rng, n)));
    const double tv_in = tv(p, q);
    const Distribution mp = push_forward(k, p);
    const Distribution mq = push_forward(k, q);
    const double tv_out = tv(mp, mq);
    const ExtendedReal kl_out = kl(mp, mq);
    if (kl_out.is_infinite()) {
      throw SoundnessAlarm("sample " + std::to_string(s) +
                           ": output relative entropy is infinite although "
                           "every marginal has full support");
    }
    const double h2_out = hellinger_sq(mp, mq);

    const double klb = kl_slope * tv_in;
    const double h2b = h2_slope * tv_in;
    const double xtb = xi_slope * tv_in;
    const auto alarm = [&](const char* what, double got, double bound) {
      throw SoundnessAlarm("sample " + std::to_string(s) + ": " + what + " " +
                           fmt(got) + " exceeds its bound " + fmt(bound) +
                           " (tv_in " + fmt(tv_in) + ")");
    };
    if (kl_out.value() > klb + config.tolerance) {
      alarm("kl_out", kl_out.value(), klb);
    }
    if (h2_out > h2b + config.tolerance) alarm("h2_out", h2_out, h2b);
    if (tv_out > xtb + config.tolerance) alarm("tv_out", tv_out, xtb);

    std::vector<std::string> row = {std::to_string(s), fmt(tv_in),
                                    fmt(tv_out),       fmt(kl_out.value()),
                                    fmt(klb),          fmt(h2_out),
                                    fmt(h2b),          fmt(xtb)};
    if (baselines) {
      const double duchi_v = duchi_slope * tv_in * tv_in;
      const double kairouz_v = kairouz_slope * tv_in;
      if (kl_out.value() > duchi_v + config.tolerance) {
        alarm("kl_out (ldp baseline)", kl_out.value(), duchi_v);
      }
      if (tv_out > kairouz_v + config.tolerance) {
        alarm("tv_out (ldp baseline)", tv_out, kairouz_v);
      }
      row.push_back(fmt(duchi_v));
      row.push_back(fmt(kairouz_v));
    }
    csv_row(out, row);
  }
  return finish(config, out.str());
}

std::string run_m0_search(const ExperimentConfig& config) {
  const long samples = config.samples < 0 ? 100000 : config.samples;
  const long n_long = config.n < 0 ? 5 : config.n;
  if (n_long < 2) throw ConfigError("n must be >= 2");
  const std::size_t n = static_cast<std::size_t>(n_long);
  const double c = config.c < 0.0 ? 0.1 : config.c;
  const double eps = config.epsilon < 0.0 ? 1.0 : config.epsilon;
  PrivacyBudget{eps, c}.validate_for(n);
  const double threshold = regime_threshold(c, n);
  if (eps >= threshold) {
    throw ConfigError(
        "epsilon " + fmt(eps) + " is at or above the saturation threshold " +
        fmt(threshold) + "; two-zero-column mechanisms exist there and the "
        "emptiness search is vacuous");
  }

  long found = 0;
  std::string witness;
  std::optional<double> min_capacity;
  for (long s = 0; s < samples; ++s) {
    Rng rng = derived_rng(config.seed, static_cast<std::uint64_t>(s));
    // First column with a zero in it and a zero in its complement: force
    // one entry to 0 and a different one to 1, rest uniform on [0, 1].
    std::vector<double> p(n);
    for (auto& v : p) v = rng.uniform();
    const std::size_t zero_at = rng.next_u64() % n;
    std::size_t one_at = rng.next_u64() % (n - 1);
    if (one_at >= zero_at) ++one_at;
    p[zero_at] = 0.0;
    p[one_at] = 1.0;

    const FeasibilityResult f = feasibility(p, eps, c);
    if (f.feasible) {
      ++found;
      if (witness.empty()) {
        std::ostringstream w;
        for (double v : p) w << ' ' << fmt(v);
        witness = w.str();
      }
    }
    std::vector<std::vector<double>> rows(n);
    for (std::size_t x = 0; x < n; ++x) rows[x] = {p[x], 1.0 - p[x]};
    const double cap = leakage_capacity(StochasticKernel(std::move(rows)), c);
    if (!min_capacity || cap < *min_capacity) min_capacity = cap;
  }

  if (found > 0) {
    throw SoundnessAlarm(
        std::to_string(found) +
        " two-zero-column vectors passed the feasibility constraints below "
        "the saturation threshold; first witness:" +
        witness);
  }
  if (min_capacity && *min_capacity < threshold - config.tolerance) {
    throw SoundnessAlarm("observed capacity " + fmt(*min_capacity) +
                         " below the threshold floor " + fmt(threshold));
  }

  nlohmann::json report{
      {"kind", "m0-search"},
      {"seed", config.seed},
      {"samples", samples},
      {"n", n},
      {"c", c},
      {"epsilon", eps},
      {"threshold", threshold},
      {"found", found},
      {"min_capacity",
       min_capacity ? nlohmann::json(*min_capacity) : nlohmann::json()},
      {"capacity_floor_satisfied", true},
  };
  return finish(config, report.dump(2) + "\n");
}

std::string run_lemma4_check(const ExperimentConfig& config) {
  const long samples = config.samples < 0 ? 1000 : config.samples;
  const long n_max = config.n_max < 0 ? 5 : config.n_max;
  const long m_max = config.m < 0 ? 6 : config.m;
  if (n_max < 2 || n_max > 5) {
    throw ConfigError("n_max must lie in [2, 5]");
  }
  if (m_max < 2 || m_max > 6) {
    throw ConfigError("m (output size cap) must lie in [2, 6]");
  }
  std::vector<double> c_list = config.c_list;
  if (c_list.empty()) c_list = {0.05, 0.1};
  for (double c : c_list) {
    if (!(c > 0.0) || c > 1.0 / static_cast<double>(n_max)) {
      throw ConfigError("every c must lie in (0, 1/n_max]");
    }
  }

  double max_tv_violation = 0.0;
  double max_capacity_increase = samples > 0 ? -1e300 : 0.0;
  for (long s = 0; s < samples; ++s) {
    Rng rng = derived_rng(config.seed, static_cast<std::uint64_t>(s));
    const std::size_t n =
        2 + rng.next_u64() % static_cast<std::uint64_t>(n_max - 1);
    const std::size_t m =
        2 + rng.next_u64() % static_cast<std::uint64_t>(m_max - 1);
    std::vector<std::vector<double>> rows(n);
    if (s % 10 == 9) {
      // Constant kernel: both marginals coincide, exercising the
      // empty-event collapse.
      rows.assign(n, sample_simplex(rng, m));
    } else {
      for (auto& row : rows) row = sample_simplex(rng, m);
    }
    const StochasticKernel k(std::move(rows));
    const Distribution p{sample_simplex(rng, n)};
    const Distribution q{sample_simplex(rng, n)};
    const StochasticKernel b = binarize(k, p, q);

    const double tv_before = tv(push_forward(k, p), push_forward(k, q));
    const double tv_after = tv(push_forward(b, p), push_forward(b, q));
    const double violation = std::abs(tv_before - tv_after);
    max_tv_violation = std::max(max_tv_violation, violation);
    if (violation > config.tolerance) {
      throw SoundnessAlarm("sample " + std::to_string(s) +
                           ": two-output collapse moved the marginal tv by " +
                           fmt(violation));
    }
    for (double c : c_list) {
      const double increase = leakage_capacity(b, c) - leakage_capacity(k, c);
      max_capacity_increase = std::max(max_capacity_increase, increase);
      if (increase > config.tolerance) {
        throw SoundnessAlarm("sample " + std::to_string(s) +
                             ": collapse increased capacity at c = " + fmt(c) +
                             " by " + fmt(increase));
      }
    }
  }

  nlohmann::json report{
      {"kind", "lemma4-check"},
      {"seed", config.seed},
      {"samples", samples},
      {"n_max", n_max},
      {"m_max", m_max},
      {"c_list", c_list},
      {"constant_kernel_every", 10},
      {"max_tv_violation", max_tv_violation},
      {"max_capacity_increase", max_capacity_increase},
      {"tv_preserved", true},
      {"capacity_nonincreasing", true},
  };
  return finish(config, report.dump(2) + "\n");
}

std::string run_theorem3_grid(const ExperimentConfig& config) {
  // Row-level assertion tolerances: the coefficient identity holds to
  // rounding error, the capacity identity through a log of ratios.
  constexpr double kCoeffTol = 1e-12;
  constexpr double kCapTol = 1e-9;

  std::vector<long> n_list = config.n_list;
  if (n_list.empty()) n_list = {2, 3, 4, 5, 6};
  for (long n : n_list) {
    if (n < 2) throw ConfigError("every n must be >= 2");
  }

  std::ostringstream out;
  out << "# kind: theorem3-grid\n";
  out << "# coeff_tolerance: " << fmt(kCoeffTol) << "\n";
  out << "# cap_tolerance: " << fmt(kCapTol) << "\n";
  csv_row(out, {"n", "c", "epsilon", "q", "status", "dobrushin", "xi",
                "capacity", "coeff_error", "cap_error"});

  for (long n_long : n_list) {
    const std::size_t n = static_cast<std::size_t>(n_long);
    std::vector<double> c_values = config.c_list;
    if (c_values.empty()) {
      c_values = {0.01, 0.05, 0.5 / static_cast<double>(n)};
    }
    for (double c : c_values) {
      std::vector<double> eps_values = config.eps_list;
      if (eps_values.empty()) {
        eps_values = {0.1, 0.5, 0.9 * regime_threshold(c, n)};
      }
      for (double eps : eps_values) {
        for (std::size_t q = 1; q < n; ++q) {
          std::vector<std::string> row = {std::to_string(n), fmt(c), fmt(eps),
                                          std::to_string(q)};
          try {
            const StochasticKernel k = construct_optimal({n, eps, c, q});
            const double dob = dobrushin(k);
            const double xiv = xi(eps, c, n);
            const double cap = leakage_capacity(k, c);
            const double coeff_error = std::abs(dob - xiv);
            const double cap_error = std::abs(cap - eps);
            if (coeff_error > kCoeffTol) {
              throw SoundnessAlarm(
                  "construction at n=" + std::to_string(n) + " c=" + fmt(c) +
                  " eps=" + fmt(eps) + " q=" + std::to_string(q) +
                  ": coefficient " + fmt(dob) + " vs cap " + fmt(xiv));
            }
            if (cap_error > kCapTol) {
              throw SoundnessAlarm(
                  "construction at n=" + std::to_string(n) + " c=" + fmt(c) +
                  " eps=" + fmt(eps) + " q=" + std::to_string(q) +
                  ": capacity " + fmt(cap) + " vs epsilon " + fmt(eps));
            }
            row.insert(row.end(), {"ok", fmt(dob), fmt(xiv), fmt(cap),
                                   fmt(coeff_error), fmt(cap_error)});
          } catch (const InfeasibleQ&) {
            row.insert(row.end(), {"infeasible_q", "", "", "", "", ""});
          } catch (const RegimeError&) {
            row.insert(row.end(), {"saturated_regime", "", "", "", "", ""});
          } catch (const DomainError&) {
            row.insert(row.end(), {"invalid_params", "", "", "", "", ""});
          }
          csv_row(out, row);
        }
      }
    }
  }
  return finish(config, out.str());
}

std::string run_minimax_table(const ExperimentConfig& config) {
  const long n_long = config.n < 0 ? 4 : config.n;
  if (n_long < 2) throw ConfigError("n must be >= 2");
  const std::size_t n = static_cast<std::size_t>(n_long);
  const double c = config.c < 0.0 ? 0.1 : config.c;
  const long n_obs = config.n_obs < 0 ? 10 : config.n_obs;
  const double target = config.target_risk < 0.0 ? 0.25 : config.target_risk;
  if (!(target > 0.0) || !(target < 0.5)) {
    throw ConfigError("target_risk must lie in (0, 0.5)");
  }
  std::vector<double> deltas = config.delta_list;
  if (deltas.empty()) deltas = {0.05, 0.1, 0.15, 0.2};
  for (double d : deltas) {
    if (!(d > 0.0) || !(d < 0.25)) {
      throw ConfigError("every delta must lie in (0, 0.25), got " + fmt(d));
    }
  }
  std::vector<double> eps_values = config.eps_list;
  if (eps_values.empty()) {
    eps_values = {std::log(2.0), std::log(1.0 / (2.0 * c))};
  }

  // Reference columns with the contraction cap removed: same risk formula
  // at cap value 1.
  const auto nonprivate = [&](double eps, double delta, double& risk,
                              std::optional<long>& complexity) {
    const double slack = std::max(1.0 - static_cast<double>(n) * c, 0.0);
    const double lg =
        slack == 0.0
            ? 0.0
            : (eps > 700.0 ? eps + std::log(slack)
                           : std::log1p(slack * std::exp(eps)));
    const double rate = lg * delta;
    risk = 0.5 * std::exp(-static_cast<double>(n_obs) * rate);
    if (!(rate > 0.0)) {
      complexity.reset();
      return;
    }
    const auto bound = [&](long nn) {
      return 0.5 * std::exp(-static_cast<double>(nn) * rate);
    };
    long nn = static_cast<long>(std::ceil(std::log(0.5 / target) / rate));
    if (nn < 1) nn = 1;
    while (bound(nn) > target) ++nn;
    while (nn > 1 && bound(nn - 1) <= target) --nn;
    complexity = nn;
  };

  std::ostringstream out;
  out << "# kind: minimax-table\n";
  out << "# n: " << n << "\n";
  out << "# c: " << fmt(c) << "\n";
  out << "# n_obs: " << n_obs << "\n";
  out << "# target_risk: " << fmt(target) << "\n";
  csv_row(out, {"epsilon", "c", "delta", "xi", "regime", "status",
                "risk_bound", "sample_complexity", "nonprivate_risk_bound",
                "nonprivate_sample_complexity"});

  for (double eps : eps_values) {
    for (double delta : deltas) {
      const double xiv = xi(eps, c, n);
      const char* regime = xiv >= 1.0 ? "saturated" : "contractive";
      const double risk = minimax_lower_bound(n_obs, eps, c, n, delta);
      std::string status = "ok";
      std::string complexity_cell;
      try {
        complexity_cell =
            std::to_string(sample_complexity(eps, c, n, delta, target));
      } catch (const SaturationError&) {
        status = "saturated_rate";
      }
      double np_risk = 0.0;
      std::optional<long> np_complexity;
      nonprivate(eps, delta, np_risk, np_complexity);
      csv_row(out,
              {fmt(eps), fmt(c), fmt(delta), fmt(xiv), regime, status,
               fmt(risk), complexity_cell, fmt(np_risk),
               np_complexity ? std::to_string(*np_complexity) : ""});
    }
  }
  return finish(config, out.str());
}

std::string run_experiment(const ExperimentConfig& config) {
  switch (config.kind) {
    case ExperimentKind::kFigure1:
      return run_figure1(config);
    case ExperimentKind::kM0Search:
      return run_m0_search(config);
    case ExperimentKind::kLemma4Check:
      return run_lemma4_check(config);
    case ExperimentKind::kTheorem3Grid:
      return run_theorem3_grid(config);
    case ExperimentKind::kMinimaxTable:
      return run_minimax_table(config);
  }
  throw ConfigError("unhandled experiment kind");
}

}  // namespace pmlc

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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pmlcontract/bounds.hpp"
#include "pmlcontract/contraction.hpp"
#include "pmlcontract/divergences.hpp"
#include "pmlcontract/errors.hpp"
#include "pmlcontract/experiments.hpp"
#include "pmlcontract/io.hpp"
#include "pmlcontract/leakage.hpp"
#include "pmlcontract/mechanisms.hpp"
#include "pmlcontract/types.hpp"

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  double tolerance = 1e-9;
};

pmlc::StochasticKernel load_kernel(const std::string& name) {
  if (name == "K1") return pmlc::reference_kernels().k1;
  if (name == "K2") return pmlc::reference_kernels().k2;
  return pmlc::read_kernel(name);
}

pmlc::Distribution load_prior(const std::string& name, std::size_t n) {
  if (name == "uniform") return pmlc::Distribution::uniform(n);
  return pmlc::read_distribution(name);
}

// CSV rendering of a flat-ish JSON document: key,value rows; nested objects
// use dotted keys, numeric arrays join with ';'.
void flatten_csv(const nlohmann::json& doc, const std::string& prefix,
                 std::string& out) {
  const auto scalar = [](const nlohmann::json& v) -> std::string {
    if (v.is_number_float()) return pmlc::format_full(v.get<double>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return "";
  };
  for (const auto& [key, v] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      flatten_csv(v, name, out);
    } else if (v.is_array()) {
      out += name + ",";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += scalar(v[i]);
      }
      out += '\n';
    } else {
      out += name + "," + scalar(v) + "\n";
    }
  }
}

void emit(const GlobalOpts& g, const nlohmann::json& doc) {
  std::string text;
  if (g.format == "csv") {
    text = "key,value\n";
    flatten_csv(doc, "", text);
  } else {
    text = doc.dump(2) + "\n";
  }
  if (g.out.empty()) {
    std::cout << text;
  } else {
    pmlc::write_text_file(g.out, text);
  }
}

void emit_text(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    pmlc::write_text_file(g.out, text);
  }
}

nlohmann::json report_to_json(const pmlc::BoundReport& r) {
  nlohmann::json components = nlohmann::json::object();
  for (const auto& [key, v] : r.components) components[key] = v;
  return {{"value", r.value},
          {"regime",
           r.regime == pmlc::Regime::kSaturated ? "saturated" : "contractive"},
          {"components", components}};
}

nlohmann::json estimate_to_json(const pmlc::ContractionEstimate& est,
                                const std::string& div) {
  return {{"divergence", div},
          {"lower", est.lower},
          {"upper", est.upper},
          {"iterations", est.iterations},
          {"witness_p", est.witness_p.probs()},
          {"witness_q", est.witness_q.probs()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Leakage capacities, contraction coefficients, optimal mechanisms, and "
      "bound-validation experiments for discrete privacy mechanisms"};
  app.require_subcommand(1);

  GlobalOpts g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format for scalar reports")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* tol_opt = app.add_option("--tolerance", g.tolerance,
                                 "Soundness-alarm margin for experiments");

  // capacity
  std::string cap_kernel;
  double cap_c = 0.0;
  auto* cap = app.add_subcommand(
      "capacity", "Worst-case leakage over min-mass-c priors, closed form");
  cap->fallthrough();
  cap->add_option("--kernel", cap_kernel, "K1, K2, or a kernel JSON file")
      ->required();
  cap->add_option("--c", cap_c, "Minimum prior mass, in (0, 1/N]")->required();

  // ldp
  std::string ldp_kernel;
  auto* ldp_cmd = app.add_subcommand(
      "ldp", "Worst-case per-entry log ratio (Infinite when a column mixes "
             "zero and positive entries)");
  ldp_cmd->fallthrough();
  ldp_cmd->add_option("--kernel", ldp_kernel, "K1, K2, or a kernel JSON file")
      ->required();

  // pml
  std::string pml_kernel, pml_prior;
  long pml_outcome = -1;
  auto* pml_cmd = app.add_subcommand(
      "pml", "Per-outcome leakage under a fixed full-support prior");
  pml_cmd->fallthrough();
  pml_cmd->add_option("--kernel", pml_kernel, "K1, K2, or a kernel JSON file")
      ->required();
  pml_cmd
      ->add_option("--prior", pml_prior,
                   "Distribution JSON file, or \"uniform\"")
      ->required();
  pml_cmd->add_option("--outcome", pml_outcome,
                      "Single outcome index; omit for the full report");

  // dobrushin
  std::string dob_kernel;
  auto* dob_cmd = app.add_subcommand(
      "dobrushin", "TV contraction coefficient (max pairwise row distance)");
  dob_cmd->fallthrough();
  dob_cmd->add_option("--kernel", dob_kernel, "K1, K2, or a kernel JSON file")
      ->required();

  // eta
  std::string eta_kernel, eta_div;
  double eta_c = -1.0;
  int eta_restarts = 200, eta_refine = 50;
  auto* eta_cmd = app.add_subcommand(
      "eta", "Contraction coefficient search (empirical lower bound)");
  eta_cmd->fallthrough();
  eta_cmd->add_option("--kernel", eta_kernel, "K1, K2, or a kernel JSON file")
      ->required();
  eta_cmd->add_option("--div", eta_div, "Divergence to contract")
      ->required()
      ->check(CLI::IsMember({"tv", "kl", "h2", "chi2"}));
  auto* eta_c_opt = eta_cmd->add_option(
      "--c", eta_c, "Restrict the search to priors with min mass >= c");
  eta_cmd->add_option("--restarts", eta_restarts, "Search restarts");
  eta_cmd->add_option("--refine", eta_refine, "Refinement rounds per restart");

  // construct
  long con_n = 0, con_q = 1;
  double con_eps = 0.0, con_c = 0.0;
  auto* con_cmd = app.add_subcommand(
      "construct",
      "Two-output mechanism meeting the budget with equality and maximizing "
      "the TV contraction coefficient");
  con_cmd->fallthrough();
  con_cmd->add_option("--n", con_n, "Input alphabet size")->required();
  con_cmd->add_option("--eps", con_eps, "Leakage budget (nats)")->required();
  con_cmd->add_option("--c", con_c, "Minimum prior mass")->required();
  con_cmd->add_option("--q", con_q, "Count of maximal first-column entries");

  // sample
  long smp_n = 0, smp_m = 0;
  int smp_tries = 100;
  double smp_eps = 0.0, smp_c = 0.0;
  auto* smp_cmd = app.add_subcommand(
      "sample", "Random kernel meeting the leakage budget");
  smp_cmd->fallthrough();
  smp_cmd->add_option("--n", smp_n, "Input alphabet size")->required();
  smp_cmd->add_option("--m", smp_m, "Output alphabet size")->required();
  smp_cmd->add_option("--eps", smp_eps, "Leakage budget (nats)")->required();
  smp_cmd->add_option("--c", smp_c, "Minimum prior mass")->required();
  smp_cmd->add_option("--tries", smp_tries, "Resampling attempts");

  // bound
  std::string bnd_kind;
  double bnd_eps = 0.0, bnd_c = 0.0, bnd_delta = 1.0, bnd_target = 0.25;
  long bnd_n = 0, bnd_nobs = 1;
  auto* bnd_cmd =
      app.add_subcommand("bound", "Closed-form bound evaluation with audit "
                                  "components");
  bnd_cmd->fallthrough();
  bnd_cmd->add_option("--kind", bnd_kind, "Which bound")
      ->required()
      ->check(CLI::IsMember({"xi", "threshold", "gamma", "kl", "hellinger",
                             "kairouz", "duchi", "asoodeh", "minimax",
                             "complexity"}));
  auto* bnd_eps_opt = bnd_cmd->add_option("--eps", bnd_eps, "Leakage budget");
  auto* bnd_c_opt = bnd_cmd->add_option("--c", bnd_c, "Minimum prior mass");
  auto* bnd_n_opt = bnd_cmd->add_option("--n", bnd_n, "Input alphabet size");
  bnd_cmd->add_option("--delta", bnd_delta,
                      "Input TV distance (or two-point separation)");
  bnd_cmd->add_option("--n-obs", bnd_nobs, "Observation count for minimax");
  bnd_cmd->add_option("--target", bnd_target,
                      "Target risk for sample complexity");

  // experiment
  std::string exp_kind, exp_config;
  long exp_samples = -1;
  auto* exp_cmd = app.add_subcommand(
      "experiment", "Deterministic experiment drivers emitting CSV/JSON");
  exp_cmd->fallthrough();
  auto* exp_kind_opt = exp_cmd->add_option(
      "--kind", exp_kind,
      "figure1, m0-search, lemma4-check, theorem3-grid, or minimax-table");
  auto* exp_cfg_opt =
      exp_cmd->add_option("--config", exp_config, "Config JSON file");
  auto* exp_samples_opt =
      exp_cmd->add_option("--samples", exp_samples, "Sample count override");

  try {
    app.parse(argc, argv);

    if (*cap) {
      const pmlc::StochasticKernel k = load_kernel(cap_kernel);
      emit(g, {{"capacity", pmlc::leakage_capacity(k, cap_c)},
               {"c", cap_c},
               {"n", k.inputs()},
               {"m", k.outputs()}});
    } else if (*ldp_cmd) {
      const pmlc::StochasticKernel k = load_kernel(ldp_kernel);
      const pmlc::ExtendedReal v = pmlc::ldp(k);
      emit(g, {{"ldp", v.is_finite() ? nlohmann::json(v.value())
                                     : nlohmann::json("Infinite")}});
    } else if (*pml_cmd) {
      const pmlc::StochasticKernel k = load_kernel(pml_kernel);
      const pmlc::Distribution p = load_prior(pml_prior, k.inputs());
      if (pml_outcome >= 0) {
        emit(g, {{"outcome", pml_outcome},
                 {"leakage", pmlc::pml_pointwise(
                                 k, p, static_cast<std::size_t>(pml_outcome))}});
      } else {
        const pmlc::LeakageReport r = pmlc::pml_report(k, p);
        emit(g, {{"per_outcome", r.per_outcome}, {"capacity", r.capacity}});
      }
    } else if (*dob_cmd) {
      emit(g, {{"dobrushin", pmlc::dobrushin(load_kernel(dob_kernel))}});
    } else if (*eta_cmd) {
      const pmlc::StochasticKernel k = load_kernel(eta_kernel);
      pmlc::SearchConfig sc{eta_restarts, eta_refine, g.seed};
      std::optional<double> min_mass;
      if (eta_c_opt->count()) min_mass = eta_c;
      pmlc::ContractionEstimate est = [&] {
        if (eta_div == "chi2") {
          if (min_mass) {
            throw pmlc::DomainError(
                "the chi-squared search does not take a min-mass restriction");
          }
          return pmlc::eta_chi2(k, sc);
        }
        const pmlc::DivergenceSpec spec =
            eta_div == "tv"   ? pmlc::DivergenceSpec::total_variation()
            : eta_div == "kl" ? pmlc::DivergenceSpec::kl()
                              : pmlc::DivergenceSpec::hellinger_sq();
        return pmlc::empirical_eta_f(k, spec, min_mass, sc);
      }();
      emit(g, estimate_to_json(est, eta_div));
    } else if (*con_cmd) {
      if (con_n < 2) throw pmlc::DomainError("--n must be >= 2");
      if (con_q < 1) throw pmlc::DomainError("--q must be >= 1");
      const pmlc::StochasticKernel k = pmlc::construct_optimal(
          {static_cast<std::size_t>(con_n), con_eps, con_c,
           static_cast<std::size_t>(con_q)});
      emit_text(g, pmlc::kernel_to_json(k));
    } else if (*smp_cmd) {
      if (smp_n < 2 || smp_m < 2) {
        throw pmlc::DomainError("--n and --m must be >= 2");
      }
      const pmlc::StochasticKernel k = pmlc::sample_kernel(
          static_cast<std::size_t>(smp_n), static_cast<std::size_t>(smp_m),
          {smp_eps, smp_c}, g.seed, smp_tries);
      emit_text(g, pmlc::kernel_to_json(k));
    } else if (*bnd_cmd) {
      const auto need = [&](const CLI::Option* opt, const char* name) {
        if (!opt->count()) {
          throw pmlc::DomainError(std::string("bound --kind ") + bnd_kind +
                                  " requires " + name);
        }
      };
      const std::size_t nn = static_cast<std::size_t>(bnd_n);
      pmlc::BoundReport r;
      if (bnd_kind == "xi") {
        need(bnd_eps_opt, "--eps"), need(bnd_c_opt, "--c"),
            need(bnd_n_opt, "--n");
        r = pmlc::report_xi(bnd_eps, bnd_c, nn);
      } else if (bnd_kind == "threshold") {
        need(bnd_c_opt, "--c"), need(bnd_n_opt, "--n");
        r = pmlc::report_threshold(bnd_c, nn);
      } else if (bnd_kind == "gamma") {
        need(bnd_eps_opt, "--eps"), need(bnd_c_opt, "--c"),
            need(bnd_n_opt, "--n");
        r = pmlc::report_gamma(bnd_eps, bnd_c, nn);
      } else if (bnd_kind == "kl") {
        need(bnd_eps_opt, "--eps"), need(bnd_c_opt, "--c"),
            need(bnd_n_opt, "--n");
        r = pmlc::report_divergence_bound(pmlc::DivergenceSpec::kl(), bnd_eps,
                                          bnd_c, nn, bnd_delta);
      } else if (bnd_kind == "hellinger") {
        need(bnd_eps_opt, "--eps"), need(bnd_c_opt, "--c"),
            need(bnd_n_opt, "--n");
        r = pmlc::report_divergence_bound(pmlc::DivergenceSpec::hellinger_sq(),
                                          bnd_eps, bnd_c, nn, bnd_delta);
      } else if (bnd_kind == "kairouz") {
        need(bnd_eps_opt, "--eps");
        r = pmlc::report_kairouz(bnd_eps);
      } else if (bnd_kind == "duchi") {
        need(bnd_eps_opt, "--eps");
        r = pmlc::report_duchi(bnd_eps, bnd_delta);
      } else if (bnd_kind == "asoodeh") {
        need(bnd_eps_opt, "--eps");
        r = pmlc::report_asoodeh(bnd_eps);
      } else if (bnd_kind == "minimax") {
        need(bnd_eps_opt, "--eps"), need(bnd_c_opt, "--c"),
            need(bnd_n_opt, "--n");
        r = pmlc::report_minimax(bnd_nobs, bnd_eps, bnd_c, nn, bnd_delta);
      } else {
        need(bnd_eps_opt, "--eps"), need(bnd_c_opt, "--c"),
            need(bnd_n_opt, "--n");
        r = pmlc::report_sample_complexity(bnd_eps, bnd_c, nn, bnd_delta,
                                           bnd_target);
      }
      nlohmann::json doc = report_to_json(r);
      doc["kind"] = bnd_kind;
      emit(g, doc);
    } else if (*exp_cmd) {
      pmlc::ExperimentConfig config;
      if (exp_cfg_opt->count()) {
        config = pmlc::read_experiment_config(exp_config);
      } else if (!exp_kind_opt->count()) {
        throw pmlc::ConfigError("experiment needs --kind or --config");
      }
      if (exp_kind_opt->count()) {
        config.kind = pmlc::experiment_kind_from_string(exp_kind);
      }
      if (seed_opt->count()) config.seed = g.seed;
      if (tol_opt->count()) config.tolerance = g.tolerance;
      if (exp_samples_opt->count()) {
        if (exp_samples < 0) throw pmlc::ConfigError("--samples must be >= 0");
        config.samples = exp_samples;
      }
      if (!g.out.empty()) config.output_path = g.out;
      const std::string text = pmlc::run_experiment(config);
      if (config.output_path.empty()) std::cout << text;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pmlc::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const pmlc::SoundnessAlarm& e) {
    std::cerr << "soundness alarm: " << e.what() << "\n";
    return 3;
  } catch (const pmlc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pmlc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

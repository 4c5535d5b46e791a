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

#include <cstdint>
#include <string>
#include <vector>

namespace pmlc {

enum class ExperimentKind {
  kFigure1,       // bound-vs-empirical sweep over random prior pairs
  kM0Search,      // randomized emptiness check for two-zero-column mechanisms
  kLemma4Check,   // binarization: TV preservation and capacity non-increase
  kTheorem3Grid,  // optimal-construction grid: coefficient and capacity
  kMinimaxTable,  // risk lower bounds and sample complexities
};

ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(ExperimentKind kind);

// Fully-typed experiment configuration. parse_experiment_config fills
// unspecified fields with per-kind defaults; empty list fields mean
// "use the default grid".
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kFigure1;
  std::uint64_t seed = 0;
  long samples = -1;         // -1: per-kind default
  std::string output_path;   // empty: caller prints the returned text
  double tolerance = 1e-9;   // soundness-alarm margin

  std::string kernel = "K1";  // figure1: K1, K2, or a kernel file path
  double c = -1.0;            // -1: per-kind default
  double epsilon = -1.0;
  long n = -1;                // input alphabet size
  long m = -1;                // output alphabet size cap (lemma4-check)
  long n_max = -1;            // input alphabet size cap (lemma4-check)
  std::vector<double> c_list;
  std::vector<double> eps_list;
  std::vector<long> n_list;
  std::vector<double> delta_list;
  long n_obs = -1;            // sample count for the risk bound
  double target_risk = -1.0;
};

// Reads {"kind": ..., "seed": ..., "samples": ..., "output_path": ...,
// "parameters": {...}} and applies defaults. Throws ConfigError on unknown
// kinds or malformed values.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig read_experiment_config(const std::string& path);

// Each runner returns the rendered output document (CSV or JSON) and also
// writes it to config.output_path when set. Runs are deterministic: the
// same config and seed produce byte-identical text. Any empirical value
// found above its bound raises SoundnessAlarm with the witness in the
// message.
std::string run_figure1(const ExperimentConfig& config);
std::string run_m0_search(const ExperimentConfig& config);
std::string run_lemma4_check(const ExperimentConfig& config);
std::string run_theorem3_grid(const ExperimentConfig& config);
std::string run_minimax_table(const ExperimentConfig& config);

// Dispatch on config.kind.
std::string run_experiment(const ExperimentConfig& config);

}  // namespace pmlc

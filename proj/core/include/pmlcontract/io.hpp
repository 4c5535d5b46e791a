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

#include <string>

#include "pmlcontract/types.hpp"

namespace pmlc {

// File formats: a kernel is {"rows": [[...], ...]}, a distribution is
// {"probs": [...]}. Parsing validates like the type constructors do.

StochasticKernel parse_kernel(const std::string& json_text);
Distribution parse_distribution(const std::string& json_text);

StochasticKernel read_kernel(const std::string& path);
Distribution read_distribution(const std::string& path);

std::string kernel_to_json(const StochasticKernel& k);
std::string distribution_to_json(const Distribution& p);

std::string read_text_file(const std::string& path);   // IoError on failure
void write_text_file(const std::string& path, const std::string& content);

// Shortest-round-trip-style decimal rendering with up to 17 significant
// digits (printf %.17g); used for every number in CSV output so files are
// byte-stable.
std::string format_full(double v);

}  // namespace pmlc

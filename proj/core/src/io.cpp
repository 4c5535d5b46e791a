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

#include "pmlcontract/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pmlcontract/extended_real.hpp"

namespace pmlc {

namespace {

nlohmann::json parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("input is not valid JSON");
  return j;
}

std::vector<double> number_array(const nlohmann::json& j, const char* where) {
  if (!j.is_array()) {
    throw IoError(std::string(where) + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw IoError(std::string(where) + " must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

StochasticKernel parse_kernel(const std::string& json_text) {
  const nlohmann::json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw IoError("kernel file must be an object {\"rows\": [[...], ...]}");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(j["rows"].size());
  for (const auto& row : j["rows"]) {
    rows.push_back(number_array(row, "each kernel row"));
  }
  return validate_kernel(std::move(rows));
}

Distribution parse_distribution(const std::string& json_text) {
  const nlohmann::json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("probs")) {
    throw IoError("distribution file must be an object {\"probs\": [...]}");
  }
  return Distribution(number_array(j["probs"], "probs"));
}

StochasticKernel read_kernel(const std::string& path) {
  return parse_kernel(read_text_file(path));
}

Distribution read_distribution(const std::string& path) {
  return parse_distribution(read_text_file(path));
}

std::string kernel_to_json(const StochasticKernel& k) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < k.outputs(); ++y) row.push_back(k(x, y));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", std::move(rows)}}.dump(2) + "\n";
}

std::string distribution_to_json(const Distribution& p) {
  return nlohmann::json{{"probs", p.probs()}}.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on " + path);
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_string(const ExtendedReal& v) {
  return v.is_infinite() ? "Infinite" : format_full(v.value());
}

}  // namespace pmlc

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

#include "pmlcontract/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace pmlc {

namespace {

void check_probability_row(const std::vector<double>& v, const char* what) {
  double sum = 0.0;
  for (double x : v) {
    if (x < 0.0 || !std::isfinite(x)) {
      throw NegativeEntryError(std::string(what) +
                               ": entry " + std::to_string(x) +
                               " is negative or non-finite");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kStochasticTol) {
    throw RowSumError(std::string(what) + ": entries sum to " +
                      std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

Distribution::Distribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw DomainError("distribution needs an alphabet of size >= 2");
  }
  check_probability_row(probs_, "distribution");
}

Distribution Distribution::uniform(std::size_t n) {
  if (n < 2) throw DomainError("uniform distribution needs n >= 2");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double Distribution::min_mass() const {
  return *std::min_element(probs_.begin(), probs_.end());
}

bool Distribution::full_support() const { return min_mass() > kZeroMass; }

StochasticKernel::StochasticKernel(std::vector<std::vector<double>> rows,
                                   ColumnPolicy policy) {
  n_ = rows.size();
  if (n_ < 2) throw DomainError("kernel needs at least 2 rows");
  m_ = rows.front().size();
  if (m_ < 2) throw DomainError("kernel needs at least 2 columns");
  data_.reserve(n_ * m_);
  for (std::size_t x = 0; x < n_; ++x) {
    if (rows[x].size() != m_) {
      throw DimensionMismatch("kernel row " + std::to_string(x) + " has " +
                              std::to_string(rows[x].size()) +
                              " entries, expected " + std::to_string(m_));
    }
    check_probability_row(rows[x], "kernel row");
    data_.insert(data_.end(), rows[x].begin(), rows[x].end());
  }
  if (policy == ColumnPolicy::kRejectDeadColumns) {
    for (std::size_t y = 0; y < m_; ++y) {
      bool live = false;
      for (std::size_t x = 0; x < n_ && !live; ++x) {
        live = data_[x * m_ + y] > kZeroMass;
      }
      if (!live) {
        throw DeadColumnError("kernel column " + std::to_string(y) +
                              " is all zeros (unreachable output)");
      }
    }
  }
}

Distribution StochasticKernel::row_distribution(std::size_t x) const {
  auto r = row(x);
  return Distribution(std::vector<double>(r.begin(), r.end()));
}

CredalSet::CredalSet(double c, std::size_t n) : c_(c), n_(n) {
  if (n < 2) throw DomainError("credal set needs an alphabet of size >= 2");
  if (!(c > 0.0) || c > 1.0 / static_cast<double>(n)) {
    throw DomainError("min mass must lie in (0, 1/N], got " +
                      std::to_string(c));
  }
}

bool CredalSet::degenerate() const {
  return c_ >= 1.0 / static_cast<double>(n_) - kCredalSlack;
}

bool CredalSet::contains(const Distribution& p) const {
  if (p.size() != n_) {
    throw DimensionMismatch("distribution size does not match credal set");
  }
  return p.min_mass() >= c_ - kCredalSlack;
}

Distribution CredalSet::embed(const Distribution& v) const {
  if (v.size() != n_) {
    throw DimensionMismatch("simplex point size does not match credal set");
  }
  const double scale = 1.0 - static_cast<double>(n_) * c_;
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = c_ + scale * v[i];
  return Distribution(std::move(out));
}

void PrivacyBudget::validate_for(std::size_t n) const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("leakage budget must be a finite epsilon >= 0");
  }
  CredalSet(c, n);  // validates c against the alphabet size
}

StochasticKernel validate_kernel(std::vector<std::vector<double>> raw) {
  return StochasticKernel(std::move(raw));
}

bool in_credal_set(const Distribution& p, double c) {
  return CredalSet(c, p.size()).contains(p);
}

Distribution push_forward(const StochasticKernel& k, const Distribution& p) {
  if (p.size() != k.inputs()) {
    throw DimensionMismatch("prior size " + std::to_string(p.size()) +
                            " does not match kernel inputs " +
                            std::to_string(k.inputs()));
  }
  std::vector<double> out(k.outputs(), 0.0);
  for (std::size_t x = 0; x < k.inputs(); ++x) {
    const double w = p[x];
    auto row = k.row(x);
    for (std::size_t y = 0; y < k.outputs(); ++y) out[y] += w * row[y];
  }
  return Distribution(std::move(out));
}

}  // namespace pmlc

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

#include <cstddef>
#include <span>
#include <vector>

#include "pmlcontract/errors.hpp"

namespace pmlc {

// Stochasticity tolerance: rows and probability vectors must sum to 1 within
// this. Inputs are accepted verbatim, never renormalized; silent fixes mask
// data errors.
inline constexpr double kStochasticTol = 1e-9;

// Masses at or below this are treated as exact zeros for support queries, so
// float dust cannot flip decomposability or LDP-finiteness decisions.
inline constexpr double kZeroMass = 1e-15;

// Slack for min-mass membership tests.
inline constexpr double kCredalSlack = 1e-12;

// Slack when comparing a leakage value against a budget.
inline constexpr double kLeakageSlack = 1e-12;

// A probability vector on an alphabet of size >= 2. Immutable once built.
class Distribution {
 public:
  // Validates: length >= 2, entries >= 0, sum within kStochasticTol of 1.
  // Throws DomainError, NegativeEntryError, RowSumError.
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  std::span<const double> span() const { return probs_; }

  double min_mass() const;
  // True when every mass exceeds kZeroMass.
  bool full_support() const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.probs_ == b.probs_;
  }

 private:
  std::vector<double> probs_;
};

enum class ColumnPolicy {
  // Reject kernels with an all-zero column (unreachable output symbol).
  kRejectDeadColumns,
  // Permit dead columns. Needed only for two-column collapses of kernels
  // whose witness event is empty; general inputs should be validated.
  kAllowDeadColumns,
};

// An N x M row-stochastic matrix: row x is the output distribution given
// input x. Immutable once built.
class StochasticKernel {
 public:
  // Validates shape (N >= 2, M >= 2, rectangular), nonnegativity, row sums
  // within kStochasticTol, and (by default) absence of dead columns.
  // Throws DomainError, DimensionMismatch, NegativeEntryError, RowSumError,
  // DeadColumnError.
  explicit StochasticKernel(
      std::vector<std::vector<double>> rows,
      ColumnPolicy policy = ColumnPolicy::kRejectDeadColumns);

  std::size_t inputs() const { return n_; }
  std::size_t outputs() const { return m_; }

  // Entry K(y | x).
  double operator()(std::size_t x, std::size_t y) const {
    return data_[x * m_ + y];
  }
  std::span<const double> row(std::size_t x) const {
    return {data_.data() + x * m_, m_};
  }
  Distribution row_distribution(std::size_t x) const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<double> data_;  // row-major
};

// The set of distributions on an n-letter alphabet with every mass >= c.
// Requires 0 < c <= 1/n; c = 1/n is the degenerate singleton {uniform}.
class CredalSet {
 public:
  CredalSet(double c, std::size_t n);  // throws DomainError

  double c() const { return c_; }
  std::size_t n() const { return n_; }
  bool degenerate() const;

  bool contains(const Distribution& p) const;

  // Maps a free simplex point v to c*1 + (1 - n*c)*v, the extreme-point
  // parameterization of the set. Every image passes contains().
  Distribution embed(const Distribution& v) const;

 private:
  double c_;
  std::size_t n_;
};

// A leakage constraint: leakage at most epsilon (nats) against every prior
// with min mass >= c.
struct PrivacyBudget {
  double epsilon = 0.0;
  double c = 0.0;

  // Throws DomainError unless epsilon >= 0 and 0 < c <= 1/n.
  void validate_for(std::size_t n) const;
};

// Named constructor for a validated kernel; equivalent to the
// StochasticKernel constructor.
StochasticKernel validate_kernel(std::vector<std::vector<double>> raw);

// True iff min_x p(x) >= c - kCredalSlack. Throws DomainError when c is
// outside (0, 1/N].
bool in_credal_set(const Distribution& p, double c);

// The output marginal of k under input law p: entry y is sum_x k(y|x) p(x).
Distribution push_forward(const StochasticKernel& k, const Distribution& p);

}  // namespace pmlc

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

#include <stdexcept>
#include <string>

namespace pmlc {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected inputs: malformed matrices, out-of-range parameters, bad configs.
// The CLI maps this family to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// A row of a kernel (or a probability vector) does not sum to 1 within
// tolerance.
struct RowSumError : ValidationError {
  using ValidationError::ValidationError;
};

// A probability mass or kernel entry is negative.
struct NegativeEntryError : ValidationError {
  using ValidationError::ValidationError;
};

// A kernel column is identically zero: the output symbol is unreachable.
struct DeadColumnError : ValidationError {
  using ValidationError::ValidationError;
};

// Mismatched vector/matrix dimensions.
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

// A scalar parameter is outside its admissible range.
struct DomainError : ValidationError {
  using ValidationError::ValidationError;
};

// A distribution that must have full support has a zero mass.
struct SupportError : ValidationError {
  using ValidationError::ValidationError;
};

// The requested output symbol has zero marginal probability.
struct DeadOutcomeError : ValidationError {
  using ValidationError::ValidationError;
};

// Input too large for an exhaustive oracle.
struct SizeError : ValidationError {
  using ValidationError::ValidationError;
};

// Invalid search configuration (no restarts, negative refinement rounds).
struct SearchConfigError : ValidationError {
  using ValidationError::ValidationError;
};

// A user-supplied divergence generator violates its contract (f(1) != 0, or
// a non-finite value where a finite one is required).
struct GeneratorError : ValidationError {
  using ValidationError::ValidationError;
};

// The requested leakage level admits no contractive mechanism of the asked
// form; the construction works only below the saturation threshold.
struct RegimeError : ValidationError {
  using ValidationError::ValidationError;
};

// The requested count of maximal entries is not feasible at this (eps, c).
struct InfeasibleQ : ValidationError {
  using ValidationError::ValidationError;
};

// The bound cannot reach the requested target (zero contraction rate).
struct SaturationError : ValidationError {
  using ValidationError::ValidationError;
};

// A sampler ran out of attempts.
struct ExhaustedError : ValidationError {
  using ValidationError::ValidationError;
};

// Malformed experiment configuration.
struct ConfigError : ValidationError {
  using ValidationError::ValidationError;
};

// An empirical quantity exceeded its proven bound: either the mathematics or
// the implementation is broken, so abort loudly. CLI exit code 3.
struct SoundnessAlarm : Error {
  using Error::Error;
};

// File read/write failure. CLI exit code 4.
struct IoError : Error {
  using Error::Error;
};

}  // namespace pmlc

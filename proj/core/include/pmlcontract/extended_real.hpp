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

// A real number or +infinity. Divergences and privacy levels that can be
// unbounded return this instead of an IEEE inf, so callers must branch
// explicitly before treating the result as a number.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v) { return ExtendedReal(v, true); }
  static ExtendedReal infinity() { return ExtendedReal(0.0, false); }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  // The finite value. Throws std::logic_error when infinite; callers are
  // expected to have branched on is_finite() already.
  double value() const {
    if (!finite_) throw std::logic_error("ExtendedReal: value() on infinity");
    return value_;
  }

  double value_or(double fallback) const { return finite_ ? value_ : fallback; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    return a < b || a == b;
  }

 private:
  ExtendedReal(double v, bool finite) : value_(v), finite_(finite) {}
  double value_;
  bool finite_;
};

std::string to_string(const ExtendedReal& x);

}  // namespace pmlc

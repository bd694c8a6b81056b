// Copyright 2026 The phiapprox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace phiapprox {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of the operation
// (negative x where x >= 0 is required, p outside (0, 1), NaN, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The operation was called with the wrong kind of method, or with
// mismatched inputs (e.g. an erf method passed to a CDF entry point).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A grid or oracle configuration violates its invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Writing or reading a CSV stream failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// The inverse solver found no admissible root. Only reachable for inputs
// beyond the image of the approximation (e.g. tail probabilities below
// what a saturating exponent can produce).
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace phiapprox

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

namespace phiapprox::oracle {

// Reference erf / erfc / normal CDF built from the Maclaurin series and the
// Laplace continued fraction of erfc. Nothing here shares code with the
// closed-form approximations; it is the yardstick they are measured against.
//
// Absolute error is below 1e-13 on [-40, 40] with the default config.
struct OracleConfig {
  double series_threshold = 3.0;  // |x| at or below this uses the series
  int cf_terms = 60;              // continued-fraction term budget

  static constexpr double kTargetAbsErr = 1e-13;

  // Throws ConfigError unless series_threshold > 0 and cf_terms >= 20.
  void validate() const;
};

// Maclaurin series (2/sqrt(pi)) sum (-1)^n x^(2n+1) / (n! (2n+1)), with the
// terms and the running sum carried in double-double so the alternating
// cancellation for |x| around 3 costs no accuracy.
double erf_series(double x);

// erfc(x) for x > 0 from the continued fraction
//   erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm, at most max_terms levels.
double erfc_continued_fraction(double x, int max_terms);

double erf_ref(double x, const OracleConfig& config = {});
double erfc_ref(double x, const OracleConfig& config = {});

// Phi(x) = erfc(-x / sqrt 2) / 2, so the lower tail keeps full relative
// accuracy.
double phi_ref(double x, const OracleConfig& config = {});

// Bisection on phi_ref over [-10, 10] until the bracket is <= 1e-12 wide.
// Test support only.
double quantile_ref(double p);

}  // namespace phiapprox::oracle

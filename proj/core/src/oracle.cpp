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

#include "phiapprox/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phiapprox/errors.hpp"

namespace phiapprox::oracle {
namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DoubleDouble {
  double hi;
  double lo;
};

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble operator/(DoubleDouble a, double d) {
  const double q1 = a.hi / d;
  const DoubleDouble p = two_prod(q1, d);
  DoubleDouble s = two_sum(a.hi, -p.hi);
  s.lo -= p.lo;
  s.lo += a.lo;
  const double q2 = (s.hi + s.lo) / d;
  return quick_two_sum(q1, q2);
}

// 2 / sqrt(pi) to double-double precision.
constexpr DoubleDouble kTwoOverSqrtPi{1.1283791670955126, 1.533545961316588e-17};

constexpr int kMaxSeriesTerms = 1000;

void require_finite(double x, const char* where) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(where) + ": argument must be finite");
  }
}

// exp(-x^2) with x^2 split exactly, so the rounding of x^2 does not leak
// into the result for large x.
double exp_minus_square(double x) {
  const DoubleDouble x2 = two_prod(x, x);
  return std::exp(-x2.hi) * std::exp(-x2.lo);
}

}  // namespace

void OracleConfig::validate() const {
  if (!(series_threshold > 0.0) || !std::isfinite(series_threshold)) {
    throw ConfigError("OracleConfig: series_threshold must be > 0");
  }
  if (cf_terms < 20) {
    throw ConfigError("OracleConfig: cf_terms must be >= 20");
  }
}

double erf_series(double x) {
  require_finite(x, "erf_series");
  if (x == 0.0) return x;
  const DoubleDouble neg_x2 = two_prod(-x, x);
  DoubleDouble term{x, 0.0};
  DoubleDouble sum = term;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term = (term * neg_x2) / static_cast<double>(n);
    const DoubleDouble contribution = term / static_cast<double>(2 * n + 1);
    sum = sum + contribution;
    if (std::abs(contribution.hi) < 1e-17 * std::abs(sum.hi)) break;
  }
  const DoubleDouble r = sum * kTwoOverSqrtPi;
  return r.hi + r.lo;
}

double erfc_continued_fraction(double x, int max_terms) {
  require_finite(x, "erfc_continued_fraction");
  if (!(x > 0.0)) {
    throw DomainError("erfc_continued_fraction: x must be > 0");
  }
  constexpr double kTiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int n = 1; n <= max_terms; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = kTiny;
    d = 1.0 / d;
    c = x + a / c;
    if (c == 0.0) c = kTiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return exp_minus_square(x) * std::numbers::inv_sqrtpi / f;
}

double erf_ref(double x, const OracleConfig& config) {
  config.validate();
  require_finite(x, "erf_ref");
  const double ax = std::abs(x);
  const double r = ax <= config.series_threshold
                       ? erf_series(ax)
                       : 1.0 - erfc_continued_fraction(ax, config.cf_terms);
  return std::signbit(x) ? -r : r;
}

double erfc_ref(double x, const OracleConfig& config) {
  config.validate();
  require_finite(x, "erfc_ref");
  if (std::abs(x) <= config.series_threshold) return 1.0 - erf_series(x);
  if (x > 0.0) return erfc_continued_fraction(x, config.cf_terms);
  return 2.0 - erfc_continued_fraction(-x, config.cf_terms);
}

double phi_ref(double x, const OracleConfig& config) {
  require_finite(x, "phi_ref");
  return 0.5 * erfc_ref(-x / std::numbers::sqrt2, config);
}

double quantile_ref(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("quantile_ref: p must lie in (0, 1)");
  }
  double lo = -10.0;
  double hi = 10.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (phi_ref(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace phiapprox::oracle

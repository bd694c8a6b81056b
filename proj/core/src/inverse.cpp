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

#include "phiapprox/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phiapprox/errors.hpp"

namespace phiapprox {
namespace {

// -ln(1 - (1 - 2t)^2) = -ln(4 t (1 - t)) for a tail mass t in (0, 1/2].
double log_complement_from_tail(double t) {
  if (t > 0.25) {
    const double d = 1.0 - 2.0 * t;  // exact here
    return -std::log1p(-d * d);
  }
  return -(std::log(4.0 * t) + std::log1p(-t));
}

// -ln(1 - z^2) for z in [0, 1).
double log_complement_erf(double z) {
  if (z < 0.5) return -std::log1p(-z * z);
  return -(std::log1p(-z) + std::log1p(z));
}

double root_from_log_complement(Method m, double L) {
  return std::sqrt(solve_exponent_inverse(method_form(m), L).u);
}

void require_phi_method(Method m, const char* where) {
  if (!is_phi_method(m)) {
    throw UsageError(std::string(where) + ": " + std::string(method_name(m)) +
                     " is not a CDF method");
  }
}

}  // namespace

double log_complement_phi(double p) {
  if (!(p >= 0.5 && p < 1.0)) {
    throw DomainError("log_complement_phi: p must lie in [1/2, 1), got " +
                      std::to_string(p));
  }
  return log_complement_from_tail(1.0 - p);
}

InverseSolution solve_exponent_inverse(const ExponentForm& form, double L) {
  if (!std::isfinite(L) || L < 0.0) {
    throw DomainError("solve_exponent_inverse: L must be finite and >= 0");
  }
  if (L == 0.0) return {0.0, 0.0};

  const double a = form.p2 - L * form.q2;
  const double b = form.p1 - L * form.q1;
  const double c = -L * form.q0;
  auto residual = [&](double u) { return std::fma(std::fma(a, u, b), u, c); };

  if (std::abs(a) < 1e-300 * std::max(1.0, std::abs(b))) {
    if (!(b > 0.0)) {
      throw RangeError("solve_exponent_inverse: no nonnegative root (linear)");
    }
    const double u = -c / b;
    return {u, residual(u)};
  }

  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    throw RangeError("solve_exponent_inverse: complex roots for L = " +
                     std::to_string(L));
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  const double r1 = q / a;
  const double r2 = c / q;

  double u;
  if (a > 0.0) {
    // c < 0, so the roots have opposite signs.
    u = std::max(r1, r2);
  } else {
    // Both roots share a sign; the smaller one continues the branch that
    // starts at u = 0 when L = 0.
    u = std::min(r1, r2);
  }
  if (!(u >= 0.0)) {
    throw RangeError("solve_exponent_inverse: no nonnegative root for L = " +
                     std::to_string(L));
  }
  return {u, residual(u)};
}

double quantile(Method m, double p) {
  require_phi_method(m, "quantile");
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("quantile: p must lie in (0, 1), got " +
                      std::to_string(p));
  }
  const bool lower = p < 0.5;
  const double tail = lower ? p : 1.0 - p;
  const double x = root_from_log_complement(m, log_complement_from_tail(tail));
  return lower ? -x : x;
}

double inverse_erf(Method m, double z) {
  if (!is_erf_method(m)) {
    throw UsageError("inverse_erf: " + std::string(method_name(m)) +
                     " is not an erf method");
  }
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("inverse_erf: z must lie in [0, 1), got " +
                      std::to_string(z));
  }
  if (m == Method::kWinitzkiErf) {
    return root_from_log_complement(m, log_complement_erf(z));
  }
  // (1 + z) / 2 rounds to 1 for z close to 1; use the exact tail instead.
  const double tail = z < 0.5 ? 1.0 - (1.0 + z) / 2.0 : (1.0 - z) / 2.0;
  const double x = root_from_log_complement(Method::kNewPhi,
                                            log_complement_from_tail(tail));
  return x / std::numbers::sqrt2;
}

}  // namespace phiapprox

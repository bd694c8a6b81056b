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

#include "phiapprox/approx.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phiapprox/errors.hpp"

namespace phiapprox {
namespace {

constexpr double kFourOverPi = 4.0 / std::numbers::pi;

constexpr ExponentForm kNewPhiForm{17.0, 1.0, 26.694, 2.0, 0.0};
constexpr ExponentForm kSE2014PhiForm{1.2735457, 0.0743968, 2.0, 0.1480931,
                                      0.0002580};
// 2 (1 + 0.0735 x^2) expanded.
constexpr ExponentForm kWinitzkiPhiForm{kFourOverPi, 0.0735, 2.0, 0.147, 0.0};
constexpr ExponentForm kWinitzkiErfForm{kFourOverPi, 0.147, 1.0, 0.147, 0.0};

constexpr ExponentForm scale_argument(const ExponentForm& f, double s) {
  // E(s u) rewritten as a form in u.
  return {f.p1 * s, f.p2 * s * s, f.q0, f.q1 * s, f.q2 * s * s};
}

void require_nonneg_finite(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(what) + " must be finite and >= 0, got " +
                      std::to_string(x));
  }
}

// sqrt(1 - exp(E)) without forming 1 - exp(E).
double root_complement(const ExponentForm& form, double x) {
  // exp(E) underflowed long before x^2 overflows.
  if (x > 1e150) return 1.0;
  return std::sqrt(-std::expm1(exponent_eval(form, x * x)));
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::kNewPhi:
      return "new-phi";
    case Method::kSE2014Phi:
      return "se2014-phi";
    case Method::kWinitzkiPhi:
      return "winitzki-phi";
    case Method::kWinitzkiErf:
      return "winitzki-erf";
    case Method::kErfFromNew:
      return "erf-from-new";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

ExponentForm method_form(Method m) noexcept {
  switch (m) {
    case Method::kNewPhi:
      return kNewPhiForm;
    case Method::kSE2014Phi:
      return kSE2014PhiForm;
    case Method::kWinitzkiPhi:
      return kWinitzkiPhiForm;
    case Method::kWinitzkiErf:
      return kWinitzkiErfForm;
    case Method::kErfFromNew:
      return scale_argument(kNewPhiForm, 2.0);
  }
  return kNewPhiForm;
}

double exponent_eval(const ExponentForm& form, double u) {
  require_nonneg_finite(u, "u");
  if (u > 1e150) {
    // Divide through by u^2 so neither polynomial overflows.
    const double w = 1.0 / u;
    const double num = form.p1 * w + form.p2;
    const double den = (form.q0 * w + form.q1) * w + form.q2;
    return -(num / den);
  }
  const double num = (form.p1 + form.p2 * u) * u;
  const double den = form.q0 + (form.q1 + form.q2 * u) * u;
  return -(num / den);
}

double phi_nonneg(Method m, double x) {
  if (!is_phi_method(m)) {
    throw UsageError("phi_nonneg: " + std::string(method_name(m)) +
                     " is not a CDF method");
  }
  require_nonneg_finite(x, "x");
  return 0.5 + 0.5 * root_complement(method_form(m), x);
}

double phi_full(Method m, double x) {
  if (!is_phi_method(m)) {
    throw UsageError("phi_full: " + std::string(method_name(m)) +
                     " is not a CDF method");
  }
  if (!std::isfinite(x)) throw DomainError("phi_full: x must be finite");
  if (x >= 0.0) return phi_nonneg(m, x);
  return 1.0 - phi_nonneg(m, -x);
}

double erf_approx(Method m, double x) {
  if (!is_erf_method(m)) {
    throw UsageError("erf_approx: " + std::string(method_name(m)) +
                     " is not an erf method");
  }
  require_nonneg_finite(x, "x");
  if (m == Method::kWinitzkiErf) return root_complement(kWinitzkiErfForm, x);
  return 2.0 * phi_nonneg(Method::kNewPhi, x * std::numbers::sqrt2) - 1.0;
}

double evaluate(Method m, double x) {
  return is_phi_method(m) ? phi_full(m, x) : erf_approx(m, x);
}

}  // namespace phiapprox

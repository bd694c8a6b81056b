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

#include <array>
#include <optional>
#include <string_view>

namespace phiapprox {

// The five closed-form approximations. The first three approximate the
// standard normal CDF, the last two approximate erf.
enum class Method {
  kNewPhi,       // 1/2 + 1/2 sqrt(1 - exp(-x^2 (17 + x^2) / (26.694 + 2 x^2)))
  kSE2014Phi,    // quartic-over-quartic exponent, most accurate of the three
  kWinitzkiPhi,  // Winitzki's erf approximation rescaled to the CDF
  kWinitzkiErf,  // Winitzki's erf approximation
  kErfFromNew,   // erf(x) = 2 Phi(x sqrt 2) - 1 applied to kNewPhi
};

inline constexpr std::array<Method, 5> kAllMethods = {
    Method::kNewPhi, Method::kSE2014Phi, Method::kWinitzkiPhi,
    Method::kWinitzkiErf, Method::kErfFromNew};

constexpr bool is_phi_method(Method m) noexcept {
  return m == Method::kNewPhi || m == Method::kSE2014Phi ||
         m == Method::kWinitzkiPhi;
}

constexpr bool is_erf_method(Method m) noexcept { return !is_phi_method(m); }

// Lowercase hyphenated name, e.g. "new-phi".
std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

// Rational exponent E(u) = -(p1 u + p2 u^2) / (q0 + q1 u + q2 u^2), u = x^2.
//
// Every approximation in this library has the shape
//   sqrt(1 - exp(E(x^2)))
// for erf, or 1/2 + 1/2 of that for the CDF, so five numbers describe it.
// Invariants: q0 > 0, p1 > 0 and p2, q1, q2 >= 0, which make E(0) = 0 and
// E(u) <= 0 for u >= 0.
struct ExponentForm {
  double p1;
  double p2;
  double q0;
  double q1;
  double q2;

  friend bool operator==(const ExponentForm&, const ExponentForm&) = default;
};

// Coefficient table. kErfFromNew maps to the kNewPhi form under u -> 2u,
// i.e. (2 p1, 4 p2, q0, 2 q1, 4 q2).
ExponentForm method_form(Method m) noexcept;

// E(u). Throws DomainError for u < 0 or non-finite u.
double exponent_eval(const ExponentForm& form, double u);

// 1/2 + 1/2 sqrt(-expm1(E(x^2))) for x >= 0. Exactly 1/2 at x = 0.
// Throws UsageError for an erf method, DomainError for x < 0 or non-finite.
double phi_nonneg(Method m, double x);

// phi_nonneg extended to the real line by Phi(-x) = 1 - Phi(x). The two
// branches share one evaluation, so phi_full(m, x) + phi_full(m, -x) == 1
// holds exactly in double precision.
double phi_full(Method m, double x);

// erf approximation for x >= 0. kWinitzkiErf evaluates its own form,
// kErfFromNew evaluates 2 phi_nonneg(kNewPhi, x sqrt 2) - 1.
// Throws UsageError for a CDF method, DomainError for x < 0 or non-finite.
double erf_approx(Method m, double x);

// phi_full for CDF methods, erf_approx for erf methods.
double evaluate(Method m, double x);

}  // namespace phiapprox

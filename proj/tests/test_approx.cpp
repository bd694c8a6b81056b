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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "phiapprox/approx.hpp"
#include "phiapprox/errors.hpp"
#include "phiapprox/oracle.hpp"
#include "reference_values.hpp"

using namespace phiapprox;
namespace ref = phiapprox::testing;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest x for which a 1e-3 step still moves the value by more than one
// ulp near 1 (density * 1e-3 > 2^-53).
constexpr double kStrictPhiLimit = 7.0;
constexpr double kStrictErfLimit = 5.0;

}  // namespace

TEST_CASE("method_form reproduces the coefficient table") {
  CHECK(method_form(Method::kNewPhi) == ExponentForm{17, 1, 26.694, 2, 0});
  CHECK(method_form(Method::kSE2014Phi) ==
        ExponentForm{1.2735457, 0.0743968, 2, 0.1480931, 0.0002580});
  CHECK(method_form(Method::kWinitzkiErf) ==
        ExponentForm{4 / std::numbers::pi, 0.147, 1, 0.147, 0});
  CHECK(method_form(Method::kWinitzkiPhi) ==
        ExponentForm{4 / std::numbers::pi, 0.0735, 2, 0.147, 0});
  CHECK(method_form(Method::kWinitzkiPhi).p1 ==
        doctest::Approx(1.2732395447351628).epsilon(1e-16));
  // u -> 2u substitution of the new form.
  CHECK(method_form(Method::kErfFromNew) == ExponentForm{34, 4, 26.694, 4, 0});
}

TEST_CASE("method names round-trip") {
  for (Method m : kAllMethods) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK(method_name(Method::kSE2014Phi) == "se2014-phi");
  CHECK_FALSE(parse_method("new_phi").has_value());
  CHECK(is_phi_method(Method::kWinitzkiPhi));
  CHECK(is_erf_method(Method::kErfFromNew));
}

TEST_CASE("every form satisfies the sign invariants and is decreasing") {
  for (Method m : kAllMethods) {
    const ExponentForm f = method_form(m);
    CAPTURE(method_name(m));
    CHECK(f.q0 > 0);
    CHECK(f.p1 > 0);
    CHECK(f.p2 >= 0);
    CHECK(f.q1 >= 0);
    CHECK(f.q2 >= 0);
    CHECK(exponent_eval(f, 0.0) == 0.0);
    double prev = 0.0;
    for (int i = 1; i <= 20000; ++i) {
      const double e = exponent_eval(f, i * 1e-2);
      REQUIRE(e < prev);
      prev = e;
    }
  }
}

TEST_CASE("exponent_eval") {
  const ExponentForm f = method_form(Method::kNewPhi);
  CHECK(exponent_eval(f, 1.0) ==
        doctest::Approx(ref::kNewPhiExponentAtOne).epsilon(1e-15));
  CHECK(exponent_eval(method_form(Method::kWinitzkiErf), 1e6) < -1e5);

  SUBCASE("huge u stays finite and negative") {
    for (Method m : kAllMethods) {
      const double e = exponent_eval(method_form(m), 1e200);
      CHECK_FALSE(std::isnan(e));
      CHECK(e < 0);
      if (method_form(m).q2 == 0.0) CHECK(e < -1e150);
    }
    // Asymptote -p2/q2 of the quartic form.
    const ExponentForm se = method_form(Method::kSE2014Phi);
    CHECK(exponent_eval(se, 1e200) ==
          doctest::Approx(-se.p2 / se.q2).epsilon(1e-12));
  }

  SUBCASE("domain errors") {
    CHECK_THROWS_AS(exponent_eval(f, -1.0), DomainError);
    CHECK_THROWS_AS(exponent_eval(f, kNaN), DomainError);
    CHECK_THROWS_AS(exponent_eval(f, kInf), DomainError);
  }
}

TEST_CASE("phi_nonneg examples") {
  CHECK(phi_nonneg(Method::kNewPhi, 0.0) == 0.5);
  const double at_one = phi_nonneg(Method::kNewPhi, 1.0);
  CHECK(at_one == doctest::Approx(0.84132).epsilon(1e-5));
  CHECK(std::abs(at_one - ref::kReferenceTable[1].phi) < 4.00e-5);
  CHECK(std::abs(phi_nonneg(Method::kWinitzkiPhi, 2.0) -
                 ref::kReferenceTable[3].phi) < 6.21e-5);

  CHECK_THROWS_AS(phi_nonneg(Method::kNewPhi, -1.0), DomainError);
  CHECK_THROWS_AS(phi_nonneg(Method::kNewPhi, kNaN), DomainError);
  CHECK_THROWS_AS(phi_nonneg(Method::kWinitzkiErf, 1.0), UsageError);
}

TEST_CASE("phi_full examples") {
  CHECK(phi_full(Method::kNewPhi, -1.0) ==
        1.0 - phi_full(Method::kNewPhi, 1.0));
  CHECK(phi_full(Method::kNewPhi, 0.0) == 0.5);
  CHECK(phi_full(Method::kNewPhi, -0.0) == 0.5);
  CHECK(std::abs(phi_full(Method::kSE2014Phi, -2.0) - ref::kPhiAtMinus2) <
        1.14e-5);
  CHECK_THROWS_AS(phi_full(Method::kNewPhi, kInf), DomainError);
  CHECK_THROWS_AS(phi_full(Method::kNewPhi, -kInf), DomainError);
  CHECK_THROWS_AS(phi_full(Method::kErfFromNew, 0.3), UsageError);
}

TEST_CASE("erf_approx examples") {
  CHECK(erf_approx(Method::kWinitzkiErf, 0.0) == 0.0);
  CHECK(erf_approx(Method::kErfFromNew, 0.0) == 0.0);
  const double erf1 = ref::kReferenceTable[1].erf;
  CHECK(std::abs(erf_approx(Method::kWinitzkiErf, 1.0) - erf1) < 1.25e-4);
  CHECK(std::abs(erf_approx(Method::kErfFromNew, 1.0) - erf1) < 1.79e-4 * erf1);

  CHECK_THROWS_AS(erf_approx(Method::kNewPhi, 1.0), UsageError);
  CHECK_THROWS_AS(erf_approx(Method::kWinitzkiErf, -0.5), DomainError);
}

TEST_CASE("erf-from-new agrees with its substituted exponent form") {
  const ExponentForm f = method_form(Method::kErfFromNew);
  for (int i = 0; i <= 4000; ++i) {
    const double x = i * 1e-3;
    const double direct = std::sqrt(-std::expm1(exponent_eval(f, x * x)));
    REQUIRE(std::abs(erf_approx(Method::kErfFromNew, x) - direct) < 1e-15);
  }
}

TEST_CASE("every CDF method is exactly one half at zero") {
  for (Method m : kAllMethods) {
    if (is_phi_method(m)) CHECK(phi_nonneg(m, 0.0) == 0.5);
  }
}

TEST_CASE("monotone on the 1e-3 grid over [0, 10]") {
  for (Method m : kAllMethods) {
    CAPTURE(method_name(m));
    const double strict_limit =
        is_phi_method(m) ? kStrictPhiLimit : kStrictErfLimit;
    double prev = evaluate(m, 0.0);
    for (int i = 1; i <= 10000; ++i) {
      const double x = i * 1e-3;
      const double v = evaluate(m, x);
      if (x <= strict_limit) {
        REQUIRE(v > prev);
      } else {
        // Past this point consecutive values sit within one ulp of 1.
        REQUIRE(v >= prev);
      }
      prev = v;
    }
  }
}

TEST_CASE("range on [0, 40]") {
  for (Method m : kAllMethods) {
    CAPTURE(method_name(m));
    for (int i = 0; i <= 4000; ++i) {
      const double x = i * 1e-2;
      if (is_phi_method(m)) {
        const double hi = phi_full(m, x);
        const double lo = phi_full(m, -x);
        REQUIRE(hi >= 0.5);
        REQUIRE(hi <= 1.0);
        // The lower tail is 1 - phi_nonneg, so it reaches 0 exactly where
        // the upper tail saturates at 1.
        REQUIRE(lo >= 0.0);
        if (x <= 8.0) {
          REQUIRE(hi < 1.0);
          REQUIRE(lo > 0.0);
        }
      } else {
        const double v = erf_approx(m, x);
        REQUIRE(v >= 0.0);
        REQUIRE(v <= 1.0);
        if (x <= 5.5) REQUIRE(v < 1.0);
      }
    }
  }
}

TEST_CASE("saturation beyond the double range") {
  CHECK(phi_full(Method::kNewPhi, 40.0) == 1.0);
  CHECK(phi_full(Method::kNewPhi, 1e300) == 1.0);
  CHECK(phi_full(Method::kSE2014Phi, -1e300) >= 0.0);
  CHECK(erf_approx(Method::kErfFromNew, 1e300) == 1.0);
}

TEST_CASE("symmetry identity holds exactly") {
  std::mt19937_64 rng(20140101);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  for (Method m : {Method::kNewPhi, Method::kSE2014Phi, Method::kWinitzkiPhi}) {
    for (int i = 0; i < 10000; ++i) {
      const double x = dist(rng);
      REQUIRE(phi_full(m, x) + phi_full(m, -x) == 1.0);
    }
  }
}

TEST_CASE("Winitzki CDF and erf forms are the same function") {
  for (int i = 0; i <= 10000; ++i) {
    const double x = i * 1e-3;
    const double via_phi =
        2.0 * phi_nonneg(Method::kWinitzkiPhi, x * std::numbers::sqrt2) - 1.0;
    REQUIRE(std::abs(via_phi - erf_approx(Method::kWinitzkiErf, x)) < 1e-15);
  }
}

TEST_CASE("no cancellation near zero") {
  const double x = 1e-8;
  const ExponentForm f = method_form(Method::kNewPhi);
  const double leading = x * std::sqrt(f.p1 / f.q0) / 2.0;
  CHECK(phi_nonneg(Method::kNewPhi, x) - 0.5 ==
        doctest::Approx(leading).epsilon(1e-6));
  // Winitzki's slope at the origin is exactly 2 / sqrt(pi).
  CHECK(erf_approx(Method::kWinitzkiErf, 1e-150) ==
        doctest::Approx(1e-150 * 2.0 * std::numbers::inv_sqrtpi).epsilon(1e-12));
}

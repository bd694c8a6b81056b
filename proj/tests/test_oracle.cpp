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
#include "phiapprox/errors.hpp"
#include "phiapprox/oracle.hpp"
#include "reference_values.hpp"

using namespace phiapprox::oracle;
namespace ref = phiapprox::testing;

TEST_CASE("erf_ref examples") {
  CHECK(erf_ref(0.0) == 0.0);
  CHECK(std::abs(erf_ref(1.0) - 0.842700792949715) < 1e-15);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 40.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    REQUIRE(erf_ref(-x) == -erf_ref(x));
  }
}

TEST_CASE("phi_ref examples") {
  CHECK(phi_ref(0.0) == 0.5);
  CHECK(std::abs(phi_ref(1.96) - 0.975002104852) < 1e-12);
  const double lower = phi_ref(-7.0);
  CHECK(lower == doctest::Approx(ref::kPhiAtMinus7).epsilon(1e-12));
  CHECK(std::abs(phi_ref(7.0) - (1.0 - ref::kPhiAtMinus7)) < 1e-15);
  CHECK(phi_ref(-37.0) > 0.0);
  CHECK(phi_ref(-40.0) >= 0.0);  // true value is below the subnormal range
  CHECK(phi_ref(40.0) == 1.0);
}

TEST_CASE("reference table to 1e-13") {
  for (const auto& e : ref::kReferenceTable) {
    CAPTURE(e.x);
    CHECK(std::abs(erf_ref(e.x) - e.erf) <= 1e-13);
    CHECK(std::abs(phi_ref(e.x) - e.phi) <= 1e-13);
    CHECK(std::abs(phi_ref(-e.x) - (1.0 - e.phi)) <= 1e-13);
  }
}

TEST_CASE("platform erf and quadrature as third opinions") {
  for (int i = -400; i <= 400; ++i) {
    const double x = i * 1e-2;
    REQUIRE(std::abs(erf_ref(x) - std::erf(x)) < 1e-15);
    REQUIRE(std::abs(erfc_ref(x) - std::erfc(x)) <=
            1.2e-16 + 4e-15 * std::abs(std::erfc(x)));
  }
  for (double x : {0.25, 1.0, 2.5, 4.0}) {
    CHECK(std::abs(phi_ref(x) - ref::phi_by_quadrature(x)) < 1e-13);
  }
}

TEST_CASE("series and continued fraction agree at the crossover") {
  const OracleConfig cfg;
  for (double x : {cfg.series_threshold - 0.25, cfg.series_threshold,
                   cfg.series_threshold + 0.25}) {
    CAPTURE(x);
    const double series = erf_series(x);
    const double cf = 1.0 - erfc_continued_fraction(x, cfg.cf_terms);
    CHECK(std::abs(series - cf) <= 1e-14);
  }
}

TEST_CASE("phi_ref symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = dist(rng);
    REQUIRE(std::abs(phi_ref(x) + phi_ref(-x) - 1.0) <= 1e-15);
  }
}

TEST_CASE("erf and phi entry points are consistent") {
  for (int i = 0; i <= 5000; ++i) {
    const double x = i * 1e-3;
    REQUIRE(std::abs(erf_ref(x) - (2.0 * phi_ref(x * std::numbers::sqrt2) -
                                   1.0)) <= 1e-13);
  }
}

TEST_CASE("phi_ref is monotone on [-10, 10]") {
  double prev = phi_ref(-10.0);
  for (int i = -9999; i <= 10000; ++i) {
    const double x = i * 1e-3;
    const double v = phi_ref(x);
    if (x <= 7.0) {
      REQUIRE(v > prev);
    } else {
      REQUIRE(v >= prev);
    }
    prev = v;
  }
}

TEST_CASE("quantile_ref") {
  CHECK(std::abs(quantile_ref(0.5)) <= 1e-12);
  CHECK(std::abs(quantile_ref(phi_ref(1.0)) - 1.0) <= 1e-11);
  CHECK(std::abs(quantile_ref(0.975) - 1.959964) <= 1e-6);
  CHECK(std::abs(quantile_ref(0.975) - ref::kQuantile975) <= 1e-11);
  CHECK_THROWS_AS(quantile_ref(0.0), phiapprox::DomainError);
  CHECK_THROWS_AS(quantile_ref(1.0), phiapprox::DomainError);
}

TEST_CASE("configuration") {
  CHECK_THROWS_AS(erf_ref(1.0, {.series_threshold = 0.0}),
                  phiapprox::ConfigError);
  CHECK_THROWS_AS(erf_ref(1.0, {.cf_terms = 10}), phiapprox::ConfigError);
  const OracleConfig early{.series_threshold = 2.5, .cf_terms = 80};
  for (const auto& e : ref::kReferenceTable) {
    CHECK(std::abs(erf_ref(e.x, early) - e.erf) <= 1e-13);
    CHECK(std::abs(phi_ref(e.x, early) - e.phi) <= 1e-13);
  }
}

TEST_CASE("domain errors") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(erf_ref(nan), phiapprox::DomainError);
  CHECK_THROWS_AS(phi_ref(std::numeric_limits<double>::infinity()),
                  phiapprox::DomainError);
  CHECK_THROWS_AS(erfc_continued_fraction(-1.0, 60), phiapprox::DomainError);
}

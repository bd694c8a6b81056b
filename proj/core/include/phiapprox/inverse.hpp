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

#include "phiapprox/approx.hpp"

namespace phiapprox {

// Nonnegative root u = x^2 of
//   (p2 - L q2) u^2 + (p1 - L q1) u - L q0 = 0,
// which is E(u) = -L rearranged.
struct InverseSolution {
  double u;
  double residual;  // a u^2 + b u + c at the returned u, for diagnostics
};

// L = -ln(1 - (2p - 1)^2) for p in [1/2, 1).
//
// Evaluated as -[ln(2 - 2p) + ln(2p)] away from p = 1/2, where 2 - 2p is
// exact and no digits are lost as p -> 1. Within |2p - 1| < 1/2 the two
// logarithms nearly cancel, so -log1p(-(2p - 1)^2) is used instead.
// Throws DomainError outside [1/2, 1).
double log_complement_phi(double p);

// Solves E(u) = -L for u >= 0 with the cancellation-free quadratic formula.
// Falls back to the linear solution when the leading coefficient vanishes.
// Throws DomainError for negative or non-finite L, RangeError when no
// nonnegative root exists (L beyond the asymptote of E).
InverseSolution solve_exponent_inverse(const ExponentForm& form, double L);

// Exact inverse of phi_full for a CDF method. quantile(m, 1/2) == 0 and
// quantile(m, p) == -quantile(m, 1 - p) whenever 1 - p is exact.
// Throws DomainError for p outside (0, 1), UsageError for an erf method.
double quantile(Method m, double p);

// Exact inverse of erf_approx on [0, 1). kErfFromNew goes through
// quantile(kNewPhi, (1 + z) / 2) / sqrt 2.
double inverse_erf(Method m, double z);

}  // namespace phiapprox

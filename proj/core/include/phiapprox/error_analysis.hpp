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

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "phiapprox/approx.hpp"

namespace phiapprox {

// Evaluation grid lo, lo + step, lo + 2 step, ... up to hi.
struct GridSpec {
  double lo = 0.0;
  double hi = 7.0;
  double step = 1e-4;

  static constexpr std::size_t kMaxPoints = 100'000'000;

  // floor((hi - lo) / step) + 1, tolerant of the rounding in the quotient.
  std::size_t point_count() const;
  // lo + i step, clamped to hi.
  double at(std::size_t i) const;
  // Throws ConfigError unless values are finite, lo <= hi, step > 0 and the
  // point count fits under kMaxPoints. lo == hi is a single-point grid.
  void validate() const;
};

struct SweepRow {
  double x;
  double approx;
  double exact;
  double abs_err;  // approx - exact
  double rel_err;  // (approx - exact) / exact, 0 where exact == 0

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  Method method;
  GridSpec grid;
  double max_abs_err = 0.0;
  double argmax_abs = 0.0;  // first x attaining max_abs_err
  double max_rel_err = 0.0;
  double argmax_rel = 0.0;
  std::vector<SweepRow> rows;  // ascending x
};

struct SweepOptions {
  // 0 picks std::thread::hardware_concurrency(). The report is identical
  // for every value.
  unsigned threads = 0;
};

// Evaluates the approximation and the oracle at every grid point.
// CDF methods accept negative lo; erf methods require lo >= 0.
SweepReport sweep(Method m, const GridSpec& grid, SweepOptions options = {});

// Published (|abs err|, |rel err|) bounds for one method.
struct BoundSpec {
  Method method;
  double abs_bound;
  double rel_bound;
  // erf-from-new: only the relative bound is printed; the absolute one is
  // implied by the 36% reduction relative to Winitzki's erf bound.
  bool abs_bound_derived = false;
};

BoundSpec published_bounds(Method m) noexcept;

struct BoundVerdict {
  Method method;
  bool abs_pass;
  bool rel_pass;
  double abs_margin;  // bound - observed, negative on failure
  double rel_margin;
  double observed_abs;
  double observed_rel;
  double argmax_abs;
  double argmax_rel;

  bool pass() const noexcept { return abs_pass && rel_pass; }
};

// Strict comparison observed < bound. Throws UsageError if the report and
// the bounds belong to different methods.
BoundVerdict verify_bounds(const SweepReport& report, const BoundSpec& bounds);

// 100 (1 - new_max / old_max). Throws DomainError unless old_max > 0.
double reduction_percent(double new_max, double old_max);

struct TailVerdict {
  bool pass;
  double max_abs_err;          // |approx - phi_ref|
  double max_rel_err;
  double max_trivial_abs_err;  // |1 - phi_ref|
  double max_trivial_rel_err;
};

inline constexpr double kTailAbsBound = 4.00e-5;
inline constexpr double kTailRelBound = 4.53e-5;
inline constexpr double kTailNegligible = 1e-10;

// Checks that beyond x = 7 both the approximation and the constant 1 stay
// within kTailAbsBound / kTailRelBound of Phi, with every maximum also
// below kTailNegligible. Throws ConfigError if from < 7 or to < from,
// UsageError for an erf method.
TailVerdict tail_check(Method m, double from = 7.0, double to = 40.0,
                       double step = 1e-2);

// Writes "x,approx,exact,abs_err,rel_err" and one row per grid point with
// shortest round-trip decimals and '\n' line endings. Returns the number of
// data rows. Throws IoError if the stream fails; output may be partial.
std::size_t emit_csv(const SweepReport& report, std::ostream& sink);

// Parses what emit_csv writes. Throws IoError on a malformed header or row.
std::vector<SweepRow> read_csv(std::istream& source);

}  // namespace phiapprox

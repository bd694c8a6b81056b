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

#include "phiapprox/error_analysis.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>

#include "phiapprox/errors.hpp"
#include "phiapprox/oracle.hpp"

namespace phiapprox {
namespace {

constexpr std::string_view kCsvHeader = "x,approx,exact,abs_err,rel_err";

// Points per worker below which spawning threads is not worth it.
constexpr std::size_t kMinChunk = 4096;

double grid_quotient(const GridSpec& g) { return (g.hi - g.lo) / g.step; }

SweepRow evaluate_row(Method m, double x) {
  const double approx = evaluate(m, x);
  const double exact =
      is_phi_method(m) ? oracle::phi_ref(x) : oracle::erf_ref(x);
  const double abs_err = approx - exact;
  const double rel_err = exact == 0.0 ? 0.0 : abs_err / exact;
  return {x, approx, exact, abs_err, rel_err};
}

void fill_rows(Method m, const GridSpec& grid, std::vector<SweepRow>& rows,
               unsigned threads) {
  const std::size_t n = rows.size();
  const std::size_t workers =
      std::clamp<std::size_t>(n / kMinChunk, 1, std::max(1u, threads));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = evaluate_row(m, grid.at(i));
    return;
  }
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) {
            rows[i] = evaluate_row(m, grid.at(i));
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

void append_number(std::string& line, double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw IoError("emit_csv: number formatting failed");
  line.append(buf.data(), ptr);
}

}  // namespace

std::size_t GridSpec::point_count() const {
  const double q = grid_quotient(*this);
  const double nearest = std::round(q);
  const double whole =
      std::abs(q - nearest) <= 1e-9 * std::max(1.0, q) ? nearest : std::floor(q);
  return static_cast<std::size_t>(whole) + 1;
}

double GridSpec::at(std::size_t i) const {
  return std::min(lo + static_cast<double>(i) * step, hi);
}

void GridSpec::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
    throw ConfigError("grid: lo, hi and step must be finite");
  }
  if (!(step > 0.0)) throw ConfigError("grid: step must be > 0");
  if (lo > hi) throw ConfigError("grid: lo must not exceed hi");
  if (grid_quotient(*this) + 1.0 > static_cast<double>(kMaxPoints)) {
    throw ConfigError("grid: more than 1e8 points");
  }
}

SweepReport sweep(Method m, const GridSpec& grid, SweepOptions options) {
  grid.validate();
  if (is_erf_method(m) && grid.lo < 0.0) {
    throw ConfigError("sweep: erf methods need lo >= 0");
  }
  SweepReport report{.method = m, .grid = grid, .rows = {}};
  report.rows.resize(grid.point_count());

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  fill_rows(m, grid, report.rows, threads);

  // Sequential reduction: strict > keeps the first occurrence on ties.
  bool first = true;
  for (const SweepRow& row : report.rows) {
    const double a = std::abs(row.abs_err);
    const double r = std::abs(row.rel_err);
    if (first || a > report.max_abs_err) {
      report.max_abs_err = a;
      report.argmax_abs = row.x;
    }
    if (first || r > report.max_rel_err) {
      report.max_rel_err = r;
      report.argmax_rel = row.x;
    }
    first = false;
  }
  return report;
}

BoundSpec published_bounds(Method m) noexcept {
  switch (m) {
    case Method::kNewPhi:
      return {m, 4.00e-5, 4.53e-5};
    case Method::kSE2014Phi:
      return {m, 1.14e-5, 1.78e-5};
    case Method::kWinitzkiPhi:
      return {m, 6.21e-5, 6.30e-5};
    case Method::kWinitzkiErf:
      return {m, 1.25e-4, 1.28e-4};
    case Method::kErfFromNew:
      return {m, 8.1e-5, 1.79e-4, true};
  }
  return {m, 0.0, 0.0};
}

BoundVerdict verify_bounds(const SweepReport& report, const BoundSpec& bounds) {
  if (report.method != bounds.method) {
    throw UsageError("verify_bounds: report is for " +
                     std::string(method_name(report.method)) +
                     " but bounds are for " +
                     std::string(method_name(bounds.method)));
  }
  return {
      .method = report.method,
      .abs_pass = report.max_abs_err < bounds.abs_bound,
      .rel_pass = report.max_rel_err < bounds.rel_bound,
      .abs_margin = bounds.abs_bound - report.max_abs_err,
      .rel_margin = bounds.rel_bound - report.max_rel_err,
      .observed_abs = report.max_abs_err,
      .observed_rel = report.max_rel_err,
      .argmax_abs = report.argmax_abs,
      .argmax_rel = report.argmax_rel,
  };
}

double reduction_percent(double new_max, double old_max) {
  if (!(old_max > 0.0) || !std::isfinite(old_max)) {
    throw DomainError("reduction_percent: old_max must be > 0");
  }
  return 100.0 * (1.0 - new_max / old_max);
}

TailVerdict tail_check(Method m, double from, double to, double step) {
  if (!is_phi_method(m)) {
    throw UsageError("tail_check: " + std::string(method_name(m)) +
                     " is not a CDF method");
  }
  if (!(from >= 7.0)) throw ConfigError("tail_check: from must be >= 7");
  const GridSpec grid{from, to, step};
  grid.validate();

  TailVerdict v{true, 0.0, 0.0, 0.0, 0.0};
  const std::size_t n = grid.point_count();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.at(i);
    const double exact = oracle::phi_ref(x);
    const double err = std::abs(phi_full(m, x) - exact);
    const double trivial = std::abs(1.0 - exact);
    v.max_abs_err = std::max(v.max_abs_err, err);
    v.max_rel_err = std::max(v.max_rel_err, err / exact);
    v.max_trivial_abs_err = std::max(v.max_trivial_abs_err, trivial);
    v.max_trivial_rel_err = std::max(v.max_trivial_rel_err, trivial / exact);
  }
  const auto within = [](double abs, double rel) {
    return abs < kTailAbsBound && rel < kTailRelBound &&
           abs < kTailNegligible && rel < kTailNegligible;
  };
  v.pass = within(v.max_abs_err, v.max_rel_err) &&
           within(v.max_trivial_abs_err, v.max_trivial_rel_err);
  return v;
}

std::size_t emit_csv(const SweepReport& report, std::ostream& sink) {
  std::string line;
  line.reserve(128);
  sink << kCsvHeader << '\n';
  std::size_t written = 0;
  for (const SweepRow& row : report.rows) {
    line.clear();
    append_number(line, row.x);
    line.push_back(',');
    append_number(line, row.approx);
    line.push_back(',');
    append_number(line, row.exact);
    line.push_back(',');
    append_number(line, row.abs_err);
    line.push_back(',');
    append_number(line, row.rel_err);
    line.push_back('\n');
    sink << line;
    if (!sink) break;
    ++written;
  }
  sink.flush();
  if (!sink) {
    throw IoError("emit_csv: write failed after " + std::to_string(written) +
                  " rows");
  }
  return written;
}

std::vector<SweepRow> read_csv(std::istream& source) {
  std::string line;
  if (!std::getline(source, line) || line != kCsvHeader) {
    throw IoError("read_csv: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    std::array<double, 5> fields{};
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto [next, ec] = std::from_chars(p, end, fields[k]);
      const bool last = k + 1 == fields.size();
      if (ec != std::errc{} || (last ? next != end : (next == end || *next != ','))) {
        throw IoError("read_csv: malformed row at line " +
                      std::to_string(line_no));
      }
      p = last ? next : next + 1;
    }
    rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4]});
  }
  return rows;
}

}  // namespace phiapprox

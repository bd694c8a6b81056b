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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "phiapprox/errors.hpp"
#include "phiapprox/inverse.hpp"
#include "phiapprox/oracle.hpp"

namespace phiapprox::cli {
namespace {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// "4.00e-5" style: fixed mantissa digits, no exponent padding.
std::string bound_text(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2e", v);
  std::string s(buf.data());
  const auto e = s.find('e');
  std::string exponent = s.substr(e + 1);
  const char sign = exponent.front();
  exponent.erase(0, 1);
  exponent.erase(0, std::min(exponent.find_first_not_of('0'),
                             exponent.size() - 1));
  return s.substr(0, e + 1) + (sign == '-' ? "-" : "") + exponent;
}

std::string sci(double v, int digits = 4) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%+.*e", digits, v);
  return buf.data();
}

std::string general(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", v);
  return buf.data();
}

std::string percent(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f%%", v);
  return buf.data();
}

Method resolve_method(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw UsageError("unknown method '" + name +
                   "' (expected new-phi, se2014-phi, winitzki-phi, "
                   "winitzki-erf or erf-from-new)");
}

double odd_erf(Method m, double x) {
  return x < 0.0 ? -erf_approx(m, -x) : erf_approx(m, x);
}

double odd_inverse_erf(Method m, double z) {
  return z < 0.0 ? -inverse_erf(m, -z) : inverse_erf(m, z);
}

double reference(Method m, double x) {
  return is_phi_method(m) ? oracle::phi_ref(x) : oracle::erf_ref(x);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

template <class F>
double time_per_call(const std::vector<double>& inputs, F&& f, double& sum) {
  const auto start = std::chrono::steady_clock::now();
  double acc = 0.0;
  for (double x : inputs) acc += f(x);
  const auto stop = std::chrono::steady_clock::now();
  sum = acc;
  const std::chrono::duration<double, std::nano> elapsed = stop - start;
  return elapsed.count() / static_cast<double>(inputs.size());
}

struct Args {
  std::string method = "new-phi";
  std::optional<double> x;
  std::optional<double> p;
  std::optional<double> z;
  GridSpec grid;
  std::string out_path;
  std::size_t iters = 1'000'000;
};

void add_grid_options(CLI::App& cmd, Args& a) {
  cmd.add_option("--lo", a.grid.lo, "Grid start")->capture_default_str();
  cmd.add_option("--hi", a.grid.hi, "Grid end")->capture_default_str();
  cmd.add_option("--step", a.grid.step, "Grid spacing")->capture_default_str();
}

void add_method_option(CLI::App& cmd, Args& a) {
  cmd.add_option("--method", a.method,
                 "new-phi | se2014-phi | winitzki-phi | winitzki-erf | "
                 "erf-from-new")
      ->capture_default_str();
}

int do_eval(const Args& a, std::ostream& out) {
  const Method m = resolve_method(a.method);
  const double v = is_phi_method(m) ? phi_full(m, *a.x) : odd_erf(m, *a.x);
  out << shortest(v) << '\n';
  return kExitOk;
}

int do_inv(const Args& a, std::ostream& out) {
  const Method m = resolve_method(a.method);
  double v;
  if (is_phi_method(m)) {
    if (!a.p || a.z) throw UsageError("inv: CDF methods take --p only");
    v = quantile(m, *a.p);
  } else {
    if (!a.z || a.p) throw UsageError("inv: erf methods take --z only");
    v = odd_inverse_erf(m, *a.z);
  }
  out << shortest(v) << '\n';
  return kExitOk;
}

int do_sweep(const Args& a, std::ostream& out) {
  const Method m = resolve_method(a.method);
  const SweepReport report = sweep(m, a.grid);
  if (a.out_path.empty()) {
    emit_csv(report, out);
    return kExitOk;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + a.out_path + "' for writing");
  emit_csv(report, file);
  return kExitOk;
}

void print_bound_line(std::ostream& out, std::string_view name,
                      std::string_view metric, double bound, bool derived,
                      bool pass, double observed, double margin, double at) {
  out << name << "  " << metric << ' ' << bound_text(bound)
      << (derived ? " (derived)" : "") << ": " << (pass ? "PASS" : "FAIL")
      << "  observed " << sci(observed) << "  margin " << sci(margin)
      << "  at x=" << general(at) << '\n';
}

int do_verify(const Args& a, std::ostream& out) {
  bool all_pass = true;
  std::array<SweepReport, kAllMethods.size()> reports;
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    const Method m = kAllMethods[i];
    reports[i] = sweep(m, a.grid);
    const BoundSpec bounds = published_bounds(m);
    const BoundVerdict v = verify_bounds(reports[i], bounds);
    print_bound_line(out, method_name(m), "abs", bounds.abs_bound,
                     bounds.abs_bound_derived, v.abs_pass, v.observed_abs,
                     v.abs_margin, v.argmax_abs);
    print_bound_line(out, method_name(m), "rel", bounds.rel_bound, false,
                     v.rel_pass, v.observed_rel, v.rel_margin, v.argmax_rel);
    all_pass = all_pass && v.pass();
  }

  const auto& new_phi = reports[0];
  const auto& winitzki_phi = reports[2];
  const auto& winitzki_erf = reports[3];
  const auto& erf_from_new = reports[4];
  out << "reduction new-phi vs winitzki-phi: abs "
      << percent(reduction_percent(new_phi.max_abs_err, winitzki_phi.max_abs_err))
      << " rel "
      << percent(reduction_percent(new_phi.max_rel_err, winitzki_phi.max_rel_err))
      << "  (bound over bound: abs "
      << percent(reduction_percent(4.00e-5, 6.21e-5)) << " rel "
      << percent(reduction_percent(4.53e-5, 6.30e-5)) << ")\n";
  out << "reduction erf-from-new vs winitzki-erf: abs "
      << percent(reduction_percent(erf_from_new.max_abs_err,
                                   winitzki_erf.max_abs_err))
      << '\n';

  const TailVerdict tail = tail_check(Method::kNewPhi);
  out << "tail new-phi [7, 40]: " << (tail.pass ? "PASS" : "FAIL")
      << "  max_abs " << sci(tail.max_abs_err) << "  trivial_abs "
      << sci(tail.max_trivial_abs_err) << '\n';
  all_pass = all_pass && tail.pass;
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int do_bench(const Args& a, std::ostream& out) {
  const Method m = resolve_method(a.method);
  const BenchReport r = bench(m, a.iters, a.grid);
  out << "method=" << method_name(r.method) << " iters=" << r.iterations
      << " ns_per_call_approx=" << r.ns_per_call_approx
      << " ns_per_call_oracle=" << r.ns_per_call_oracle
      << " speedup=" << r.speedup << " checksum=" << shortest(r.checksum)
      << '\n';
  return kExitOk;
}

}  // namespace

BenchReport bench(Method m, std::size_t iterations, const GridSpec& grid,
                  BenchOptions options) {
  if (iterations < kMinBenchIterations) {
    throw UsageError("bench: iterations must be >= 100000");
  }
  if (options.repetitions < 5) {
    throw UsageError("bench: at least 5 repetitions are required");
  }
  grid.validate();
  if (is_erf_method(m) && grid.lo < 0.0) {
    throw ConfigError("bench: erf methods need lo >= 0");
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> dist(grid.lo, grid.hi);
  std::vector<double> inputs(iterations);
  for (double& x : inputs) x = grid.lo == grid.hi ? grid.lo : dist(rng);

  std::vector<double> approx_ns;
  std::vector<double> oracle_ns;
  double checksum = 0.0;
  double oracle_sum = 0.0;
  for (int rep = 0; rep < options.repetitions; ++rep) {
    approx_ns.push_back(time_per_call(
        inputs, [m](double x) { return evaluate(m, x); }, checksum));
    oracle_ns.push_back(time_per_call(
        inputs, [m](double x) { return reference(m, x); }, oracle_sum));
  }
  // Keeps the oracle loop observable.
  volatile double sink = oracle_sum;
  (void)sink;

  BenchReport r{.method = m,
                .iterations = iterations,
                .ns_per_call_approx = median(approx_ns),
                .ns_per_call_oracle = median(oracle_ns),
                .speedup = 0.0,
                .checksum = checksum};
  r.speedup = r.ns_per_call_oracle / r.ns_per_call_approx;
  return r;
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Explicitly invertible normal CDF and erf approximations",
               "phiapprox"};
  app.require_subcommand(1);
  Args a;

  auto* eval = app.add_subcommand("eval", "Evaluate an approximation at --x");
  add_method_option(*eval, a);
  eval->add_option("--x", a.x, "Argument")->required();

  auto* inv = app.add_subcommand("inv", "Invert: --p for CDF, --z for erf");
  add_method_option(*inv, a);
  inv->add_option("--p", a.p, "Probability in (0, 1)");
  inv->add_option("--z", a.z, "erf value in (-1, 1)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Error curve as CSV");
  add_method_option(*sweep_cmd, a);
  add_grid_options(*sweep_cmd, a);
  sweep_cmd->add_option("--out", a.out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check every published bound");
  add_grid_options(*verify, a);

  auto* bench_cmd = app.add_subcommand("bench", "Throughput vs the oracle");
  add_method_option(*bench_cmd, a);
  add_grid_options(*bench_cmd, a);
  bench_cmd->add_option("--iters", a.iters, "Calls per repetition")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return do_eval(a, out);
    if (inv->parsed()) return do_inv(a, out);
    if (sweep_cmd->parsed()) return do_sweep(a, out);
    if (verify->parsed()) return do_verify(a, out);
    return do_bench(a, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const RangeError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace phiapprox::cli

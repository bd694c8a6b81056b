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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "phiapprox/approx.hpp"
#include "phiapprox/error_analysis.hpp"

namespace phiapprox::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct BenchReport {
  Method method;
  std::size_t iterations;
  double ns_per_call_approx;
  double ns_per_call_oracle;
  double speedup;   // ns_per_call_oracle / ns_per_call_approx
  double checksum;  // sum of approximation outputs over the input set
};

struct BenchOptions {
  int repetitions = 5;
  std::uint64_t seed = 0x5eed'0f'9a55ULL;
};

inline constexpr std::size_t kMinBenchIterations = 100'000;

// Times the approximation and the oracle over the same inputs drawn
// uniformly from [grid.lo, grid.hi] with a fixed seed. Reports the median
// of options.repetitions runs. Throws UsageError if iterations is below
// kMinBenchIterations or repetitions < 5.
BenchReport bench(Method m, std::size_t iterations, const GridSpec& grid,
                  BenchOptions options = {});

// Runs one command. args excludes the program name. Data goes to out,
// diagnostics to err.
//
//   phiapprox <eval|inv|sweep|verify|bench> [--method NAME]
//             [--x REAL | --p REAL | --z REAL] [--lo REAL --hi REAL --step REAL]
//             [--out PATH] [--iters N]
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace phiapprox::cli

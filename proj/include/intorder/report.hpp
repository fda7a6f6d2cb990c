// Copyright 2026 The intorder Authors
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

// Test execution and the machine-readable reports.
//
// Test report (one JSON object, keys in this order):
//   method            "u-perm" | "u-asym" | "ks-perm"
//   alternative       always "Y stochastically greater than X"
//   statistic         T for the U methods, D+ for ks-perm
//   pValue            one-sided
//   alpha, rejected   rejected = pValue <= alpha
//   sampleSizes       {"m": .., "n": ..}
//   labels            {"x": .., "y": ..}
//   zScore            u-asym only, otherwise null
//   thetas            u-asym only: {theta1, theta2, theta3, varianceComponent}
//   seed              permutation methods only, otherwise null
//   permutationCount  permutation methods only, otherwise null
//   exceedCount       permutation methods only, otherwise null
//   toolVersion
//
// Power reports are written one JSON object per line (see powerReportToJson).

#ifndef INTORDER_REPORT_HPP
#define INTORDER_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "intorder/describe.hpp"
#include "intorder/interval.hpp"
#include "intorder/simulation.hpp"
#include "intorder/u_test.hpp"

namespace intorder {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kAlternative = "Y stochastically greater than X";

struct TestOptions {
  Method method = Method::UPerm;
  double alpha = 0.05;
  std::uint64_t permutations = 20000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct TestReport {
  Method method = Method::UPerm;
  double statistic = 0.0;
  double pValue = 1.0;
  double alpha = 0.05;
  bool rejected = false;
  std::size_t m = 0;
  std::size_t n = 0;
  std::string xLabel;
  std::string yLabel;
  std::optional<double> zScore;
  std::optional<ThetaEstimates> thetas;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> permutationCount;
  std::optional<std::uint64_t> exceedCount;
  std::string toolVersion = kToolVersion;

  friend bool operator==(const TestReport&, const TestReport&) = default;
};

/// Throws Error(InvalidArgument) for bad options and propagates statistic
/// errors (Degenerate for u-asym on degenerate data).
TestReport runTest(const IntervalSample& x, const IntervalSample& y,
                   const TestOptions& options);

std::string testReportToJson(const TestReport& report);
/// Throws Error(Parse) on malformed input.
TestReport testReportFromJson(std::string_view json);
std::string testReportToText(const TestReport& report);

std::string descriptionToJson(const Description& d);
/// Rows: center, lower, upper, half-range; columns: X mean (sd), Y mean (sd),
/// Welch p-value.
std::string descriptionToText(const Description& d);

struct PowerJsonOptions {
  /// Adds "elapsedSeconds" and "timestamp"; without them the output is a
  /// pure function of the inputs.
  bool includeTiming = true;
};

/// Single-line JSON object, no trailing newline.
std::string powerReportToJson(const PowerReport& report,
                              const PowerJsonOptions& options = {});
/// Timing fields are ignored when present. Throws Error(Parse).
PowerReport powerReportFromJson(std::string_view json);

/// Table grouped by family, (m, n) and delta with one method block per
/// correlation value.
std::string powerTableToText(std::span<const PowerReport> reports);

}  // namespace intorder

#endif  // INTORDER_REPORT_HPP

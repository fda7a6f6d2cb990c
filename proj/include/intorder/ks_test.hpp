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

// One-sided bivariate Kolmogorov-Smirnov statistic over the joint empirical
// CDFs of (lower, upper):
//
//   D+ = sqrt(mn / (m + n)) * sup_{s < t} (F_m(s, t) - G_n(s, t)),
//   F_m(s, t) = (1/m) #{i : L_i <= s, U_i <= t}.
//
// Both CDFs are right-continuous steps that only jump at observed endpoints,
// so the supremum is attained on the pooled grid
// {(s, t) : s a distinct lower endpoint, t a distinct upper endpoint, s < t}.
// The grid always contains (max lower, max upper) where both CDFs equal 1,
// hence D+ >= 0.

#ifndef INTORDER_KS_TEST_HPP
#define INTORDER_KS_TEST_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "intorder/interval.hpp"

namespace intorder {

double empiricalCdf(const IntervalSample& sample, double s, double t) noexcept;

struct KsOutcome {
  double dPlus = 0.0;
  double supS = 0.0;  // argmax location, supS < supT
  double supT = 0.0;
  std::size_t m = 0;
  std::size_t n = 0;
  /// mn * max(F_m - G_n), exact.
  std::int64_t scaledMax = 0;
};

/// Throws Error(InvalidArgument) if either sample is empty.
KsOutcome ksStatistic(const IntervalSample& x, const IntervalSample& y);

/// sqrt(mn / (m + n)) * scaledMax / (mn).
double ksFromScaled(std::int64_t scaledMax, std::size_t m,
                    std::size_t n) noexcept;

/// Evaluation grid of a pooled sample. Weighting pooled observation a by +n
/// when it is labelled X and by -m when labelled Y turns
/// mn (F_m - G_n)(s, t) into sum_a w_a I(L_a <= s, U_a <= t), so relabelling
/// only changes the weights.
class KsGrid {
 public:
  explicit KsGrid(std::span<const Interval> pooled);

  struct Maximum {
    std::int64_t value;
    std::size_t sIndex;  // into lowerValues()
    std::size_t tIndex;  // into upperValues()
  };

  /// isX[a] selects the label of pooled observation a; m and n are the label
  /// counts. scratch is resized as needed and may be reused across calls.
  Maximum maximize(std::span<const std::uint8_t> isX, std::size_t m,
                   std::size_t n, std::vector<std::int64_t>& scratch) const;

  struct Scratch {
    std::vector<std::int32_t> narrow;
    std::vector<std::int64_t> wide;
  };

  /// maximize(...).value without locating the argmax. Accumulates in 32 bits
  /// when mn fits, which lets the scan vectorize.
  std::int64_t maximumValue(std::span<const std::uint8_t> isX, std::size_t m,
                            std::size_t n, Scratch& scratch) const;

  std::span<const double> lowerValues() const noexcept { return lowers_; }
  std::span<const double> upperValues() const noexcept { return uppers_; }
  std::size_t pooledSize() const noexcept { return byLower_.size(); }

 private:
  template <typename Acc>
  Acc scanMaximum(std::span<const std::uint8_t> isX, Acc weightX, Acc weightY,
                  std::vector<Acc>& prefix) const;

  std::vector<double> lowers_;  // distinct, ascending
  std::vector<double> uppers_;  // distinct, ascending
  std::vector<std::uint32_t> byLower_;     // pooled indices sorted by lower
  std::vector<std::uint32_t> groupEnd_;    // per distinct lower, end in byLower_
  std::vector<std::uint32_t> firstUpper_;  // per distinct lower, first t > s
  std::vector<std::uint32_t> upperRank_;   // per pooled index
};

}  // namespace intorder

#endif  // INTORDER_KS_TEST_HPP

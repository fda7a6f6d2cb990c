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

// Label-permutation calibration of two-sample statistics.
//
// The m + n intervals are pooled (X first, then Y). Replicate b draws a
// uniformly random m-subset of pooled indices as pseudo-X by a partial
// Fisher-Yates shuffle of the identity, using the stream
// CounterRng(deriveKey(seed, b)). Intervals move as whole units, so the
// dependence between lower and upper bounds is preserved. The p-value is
// (1 + #{b : stat_b >= observed}) / (1 + B).
//
// Built-in statistics are scored on exact integers (kernel sums for T, the
// scaled CDF difference for D+), so ties between permuted and observed
// values are resolved exactly.

#ifndef INTORDER_PERMUTATION_HPP
#define INTORDER_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "intorder/interval.hpp"

namespace intorder {

enum class StatisticKind { UStatistic, KsDPlus };

const char* toString(StatisticKind kind) noexcept;

struct PermutationPlan {
  std::uint64_t permutationCount = 20000;
  std::uint64_t seed = 0;
  StatisticKind statistic = StatisticKind::UStatistic;
  /// Worker cap; 0 uses every hardware thread. Results do not depend on it.
  unsigned threads = 1;
};

struct PermutationOutcome {
  double observed = 0.0;
  double pValue = 1.0;
  std::uint64_t exceedCount = 0;
  std::uint64_t permutationCount = 0;
};

/// Throws Error(InvalidArgument) for B < 1 or empty samples.
PermutationOutcome permutationTest(const IntervalSample& x,
                                   const IntervalSample& y,
                                   const PermutationPlan& plan);

using TwoSampleStatistic =
    std::function<double(const IntervalSample&, const IntervalSample&)>;

/// Same draws as above for an arbitrary statistic, compared on doubles.
/// plan.statistic is ignored. Much slower than the built-in kinds since the
/// two samples are rebuilt for every replicate.
PermutationOutcome permutationTest(const IntervalSample& x,
                                   const IntervalSample& y,
                                   const PermutationPlan& plan,
                                   const TwoSampleStatistic& statistic);

/// Enumerates all C(m + n, m) label assignments; p = #{stat >= observed} /
/// C(m + n, m) with no smoothing. Throws Error(InvalidArgument) when the
/// count exceeds 10^6.
PermutationOutcome exhaustivePermutationTest(
    const IntervalSample& x, const IntervalSample& y,
    StatisticKind kind = StatisticKind::UStatistic);

/// Pseudo-X indices of replicate `replicate`: the first m entries of a
/// partial shuffle of 0..total-1. `indices` is overwritten.
void drawAssignment(std::uint64_t seed, std::uint64_t replicate,
                    std::size_t total, std::size_t m,
                    std::vector<std::uint32_t>& indices);

/// Row sums r_a = sum_b kernel(Z_a, Z_b) over the pooled sample. Since the
/// kernel is antisymmetric, the within-X terms cancel and the kernel sum of
/// any split equals the sum of r_a over its X members.
std::vector<std::int64_t> pooledKernelRowSums(std::span<const Interval> pooled);

}  // namespace intorder

#endif  // INTORDER_PERMUTATION_HPP

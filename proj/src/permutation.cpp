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

#include "intorder/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "intorder/error.hpp"
#include "intorder/ks_test.hpp"
#include "intorder/parallel.hpp"
#include "intorder/rng.hpp"
#include "intorder/u_test.hpp"

namespace intorder {
namespace {

constexpr std::uint64_t kMaxExhaustive = 1'000'000;

std::vector<Interval> pool(const IntervalSample& x, const IntervalSample& y) {
  std::vector<Interval> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  return pooled;
}

class UScorer {
 public:
  static constexpr bool kNeedsMask = false;
  struct Scratch {};

  UScorer(std::span<const Interval> pooled, std::size_t m)
      : rowSums_(pooledKernelRowSums(pooled)),
        m_(m),
        n_(pooled.size() - m) {}

  std::int64_t score(std::span<const std::uint32_t> xIndices,
                     std::span<const std::uint8_t>, Scratch&) const {
    std::int64_t sum = 0;
    for (std::uint32_t a : xIndices) sum += rowSums_[a];
    return sum;
  }

  double value(std::int64_t score) const {
    return static_cast<double>(score) /
           (static_cast<double>(m_) * static_cast<double>(n_));
  }

 private:
  std::vector<std::int64_t> rowSums_;
  std::size_t m_;
  std::size_t n_;
};

class KsScorer {
 public:
  static constexpr bool kNeedsMask = true;
  using Scratch = KsGrid::Scratch;

  KsScorer(std::span<const Interval> pooled, std::size_t m)
      : grid_(pooled), m_(m), n_(pooled.size() - m) {}

  std::int64_t score(std::span<const std::uint32_t>,
                     std::span<const std::uint8_t> isX,
                     Scratch& scratch) const {
    return grid_.maximumValue(isX, m_, n_, scratch);
  }

  double value(std::int64_t score) const { return ksFromScaled(score, m_, n_); }

 private:
  KsGrid grid_;
  std::size_t m_;
  std::size_t n_;
};

std::vector<std::uint8_t> identityMask(std::size_t total, std::size_t m) {
  std::vector<std::uint8_t> mask(total, 0);
  std::fill_n(mask.begin(), m, std::uint8_t{1});
  return mask;
}

void validate(const IntervalSample& x, const IntervalSample& y,
              const PermutationPlan& plan) {
  if (plan.permutationCount < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "permutation count must be at least 1");
  }
  if (x.empty() || y.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty sample");
  }
}

PermutationOutcome finish(double observed, std::uint64_t exceed,
                          std::uint64_t permutations) {
  PermutationOutcome out;
  out.observed = observed;
  out.exceedCount = exceed;
  out.permutationCount = permutations;
  out.pValue = static_cast<double>(1 + exceed) /
               static_cast<double>(1 + permutations);
  return out;
}

template <class Scorer>
PermutationOutcome runSampled(const Scorer& scorer, std::size_t total,
                              std::size_t m, const PermutationPlan& plan) {
  std::vector<std::uint32_t> observedIndices(m);
  std::iota(observedIndices.begin(), observedIndices.end(), 0u);
  const auto observedMask = identityMask(total, m);
  typename Scorer::Scratch observedScratch;
  const std::int64_t observed =
      scorer.score(observedIndices, observedMask, observedScratch);

  std::atomic<std::uint64_t> exceed{0};
  parallelFor(plan.permutationCount, plan.threads,
              [&](std::size_t begin, std::size_t end) {
                std::vector<std::uint32_t> indices;
                std::vector<std::uint8_t> mask(total, 0);
                typename Scorer::Scratch scratch;
                std::uint64_t local = 0;
                for (std::size_t b = begin; b < end; ++b) {
                  drawAssignment(plan.seed, b, total, m, indices);
                  const std::span<const std::uint32_t> xIndices(indices.data(),
                                                                m);
                  if constexpr (Scorer::kNeedsMask) {
                    std::fill(mask.begin(), mask.end(), std::uint8_t{0});
                    for (std::uint32_t a : xIndices) mask[a] = 1;
                  }
                  local += scorer.score(xIndices, mask, scratch) >= observed;
                }
                exceed.fetch_add(local, std::memory_order_relaxed);
              });
  return finish(scorer.value(observed), exceed.load(), plan.permutationCount);
}

std::uint64_t binomial(std::size_t total, std::size_t k) {
  k = std::min(k, total - k);
  unsigned __int128 value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * (total - k + i) / i;
    if (value > kMaxExhaustive) return kMaxExhaustive + 1;
  }
  return static_cast<std::uint64_t>(value);
}

// Advances `comb` (ascending, values < total) to the next k-combination in
// lexicographic order; false after the last one.
bool nextCombination(std::vector<std::uint32_t>& comb, std::size_t total) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] < total - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <class Scorer>
PermutationOutcome runExhaustive(const Scorer& scorer, std::size_t total,
                                 std::size_t m, std::uint64_t count) {
  std::vector<std::uint32_t> comb(m);
  std::iota(comb.begin(), comb.end(), 0u);
  std::vector<std::uint8_t> mask = identityMask(total, m);
  typename Scorer::Scratch scratch;
  const std::int64_t observed = scorer.score(comb, mask, scratch);

  std::uint64_t atLeast = 0;
  do {
    if constexpr (Scorer::kNeedsMask) {
      std::fill(mask.begin(), mask.end(), std::uint8_t{0});
      for (std::uint32_t a : comb) mask[a] = 1;
    }
    atLeast += scorer.score(comb, mask, scratch) >= observed;
  } while (nextCombination(comb, total));

  PermutationOutcome out;
  out.observed = scorer.value(observed);
  out.exceedCount = atLeast;
  out.permutationCount = count;
  out.pValue = static_cast<double>(atLeast) / static_cast<double>(count);
  return out;
}

}  // namespace

const char* toString(StatisticKind kind) noexcept {
  return kind == StatisticKind::UStatistic ? "u" : "ks";
}

std::vector<std::int64_t> pooledKernelRowSums(
    std::span<const Interval> pooled) {
  std::vector<std::int64_t> sums(pooled.size(), 0);
  for (std::size_t a = 0; a < pooled.size(); ++a) {
    std::int64_t row = 0;
    for (std::size_t b = 0; b < pooled.size(); ++b) {
      row += kernel(pooled[a], pooled[b]);
    }
    sums[a] = row;
  }
  return sums;
}

void drawAssignment(std::uint64_t seed, std::uint64_t replicate,
                    std::size_t total, std::size_t m,
                    std::vector<std::uint32_t>& indices) {
  indices.resize(total);
  std::iota(indices.begin(), indices.end(), 0u);
  CounterRng rng(deriveKey(seed, replicate));
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::size_t>(boundedIndex(rng, total - i));
    std::swap(indices[i], indices[j]);
  }
}

PermutationOutcome permutationTest(const IntervalSample& x,
                                   const IntervalSample& y,
                                   const PermutationPlan& plan) {
  validate(x, y, plan);
  const auto pooled = pool(x, y);
  if (plan.statistic == StatisticKind::UStatistic) {
    return runSampled(UScorer(pooled, x.size()), pooled.size(), x.size(),
                      plan);
  }
  return runSampled(KsScorer(pooled, x.size()), pooled.size(), x.size(), plan);
}

PermutationOutcome permutationTest(const IntervalSample& x,
                                   const IntervalSample& y,
                                   const PermutationPlan& plan,
                                   const TwoSampleStatistic& statistic) {
  validate(x, y, plan);
  const auto pooled = pool(x, y);
  const std::size_t total = pooled.size();
  const std::size_t m = x.size();
  const double observed = statistic(x, y);

  std::atomic<std::uint64_t> exceed{0};
  parallelFor(plan.permutationCount, plan.threads,
              [&](std::size_t begin, std::size_t end) {
                std::vector<std::uint32_t> indices;
                std::vector<std::uint8_t> mask(total);
                std::uint64_t local = 0;
                for (std::size_t b = begin; b < end; ++b) {
                  drawAssignment(plan.seed, b, total, m, indices);
                  std::fill(mask.begin(), mask.end(), std::uint8_t{0});
                  for (std::size_t i = 0; i < m; ++i) mask[indices[i]] = 1;
                  // Keep pooled order within each pseudo-sample.
                  std::vector<Interval> px;
                  std::vector<Interval> py;
                  px.reserve(m);
                  py.reserve(total - m);
                  for (std::size_t a = 0; a < total; ++a) {
                    (mask[a] ? px : py).push_back(pooled[a]);
                  }
                  local += statistic(IntervalSample(std::move(px)),
                                     IntervalSample(std::move(py))) >= observed;
                }
                exceed.fetch_add(local, std::memory_order_relaxed);
              });
  return finish(observed, exceed.load(), plan.permutationCount);
}

PermutationOutcome exhaustivePermutationTest(const IntervalSample& x,
                                             const IntervalSample& y,
                                             StatisticKind kind) {
  if (x.empty() || y.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty sample");
  }
  const auto pooled = pool(x, y);
  const std::uint64_t count = binomial(pooled.size(), x.size());
  if (count > kMaxExhaustive) {
    throw Error(ErrorKind::InvalidArgument,
                "exhaustive enumeration limited to 1e6 assignments");
  }
  if (kind == StatisticKind::UStatistic) {
    return runExhaustive(UScorer(pooled, x.size()), pooled.size(), x.size(),
                         count);
  }
  return runExhaustive(KsScorer(pooled, x.size()), pooled.size(), x.size(),
                       count);
}

}  // namespace intorder

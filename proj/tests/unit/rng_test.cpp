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

#include "intorder/rng.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "intorder/parallel.hpp"

namespace intorder {
namespace {

// Golden values from an independent Python implementation of SplitMix64.
TEST(CounterRngTest, GoldenDrawsKeyZero) {
  CounterRng rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng(), 0x06C45D188009454FULL);
  EXPECT_EQ(rng(), 0xF88BB8A8724C81ECULL);
  EXPECT_EQ(rng.counter(), 4u);
}

TEST(CounterRngTest, GoldenDrawsOtherKeys) {
  CounterRng rng(12345);
  EXPECT_EQ(rng(), 0x22118258A9D111A0ULL);
  EXPECT_EQ(rng(), 0x346EDCE5F713F8EDULL);
  EXPECT_EQ(rng(), 0x1E9A57BC80E6721DULL);
  EXPECT_EQ(rng(), 0x2D160E7E5C3F42CAULL);

  EXPECT_EQ(deriveKey(0, 0), 0x48218226FF3CD4BFULL);
  EXPECT_EQ(deriveKey(12345, 7), 0x891AB65F9738CD72ULL);

  CounterRng sub = CounterRng(42).substream(3);
  EXPECT_EQ(sub.key(), deriveKey(42, 3));
  EXPECT_EQ(sub(), 0xA3FFFF181B5F4E49ULL);
  EXPECT_EQ(sub(), 0x90CA7FA8C4C46FE8ULL);
  EXPECT_EQ(sub(), 0x09EF2104F1A1CA8BULL);
  EXPECT_EQ(sub(), 0x8D406466FA1CD254ULL);
}

TEST(CounterRngTest, GoldenUniforms) {
  CounterRng a(0);
  EXPECT_EQ(uniform01(a), 0.8833108082136426);
  CounterRng b(0);
  EXPECT_EQ(uniformOpen01(b), 0.8833108082136427);
}

TEST(CounterRngTest, UniformRanges) {
  CounterRng rng(99);
  for (int i = 0; i < 100000; ++i) {
    const double u = uniform01(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double v = uniformOpen01(rng);
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(CounterRngTest, BoundedIndexIsUniform) {
  CounterRng rng(5);
  constexpr int kBins = 7;
  constexpr int kDraws = 70000;
  std::array<int, kBins> counts{};
  for (int i = 0; i < kDraws; ++i) {
    const auto k = boundedIndex(rng, kBins);
    ASSERT_LT(k, static_cast<std::uint64_t>(kBins));
    ++counts[k];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBins;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 99.9th percentile of chi-square with 6 degrees of freedom.
  EXPECT_LT(chi2, 22.46);
  CounterRng one(5);
  EXPECT_EQ(boundedIndex(one, 1), 0u);
}

TEST(CounterRngTest, NormalMoments) {
  CounterRng rng(2024);
  constexpr int kPairs = 200000;
  double sum = 0.0;
  double sumSq = 0.0;
  double sumQuartic = 0.0;
  double cross = 0.0;
  for (int i = 0; i < kPairs; ++i) {
    const auto [a, b] = standardNormals(rng);
    sum += a + b;
    sumSq += a * a + b * b;
    sumQuartic += a * a * a * a + b * b * b * b;
    cross += a * b;
  }
  const double n = 2.0 * kPairs;
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sumSq / n, 1.0, 0.01);
  EXPECT_NEAR(sumQuartic / n, 3.0, 0.05);
  EXPECT_NEAR(cross / kPairs, 0.0, 0.01);
}

TEST(CounterRngTest, SubstreamsAreIndependentOfOrder) {
  const CounterRng root(77);
  std::vector<std::uint64_t> forward;
  for (std::uint64_t i = 0; i < 10; ++i) forward.push_back(root.substream(i)());
  for (std::uint64_t i = 10; i-- > 0;) {
    EXPECT_EQ(root.substream(i)(), forward[i]);
  }
}

TEST(ParallelForTest, CoversRangeOnceForAnyThreadCount) {
  for (unsigned threads : {1u, 2u, 3u, 8u, 0u}) {
    std::vector<int> hits(1001, 0);
    parallelFor(hits.size(), threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) ++hits[i];
    });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
  EXPECT_GE(resolveThreads(0), 1u);
  EXPECT_EQ(resolveThreads(3), 3u);
}

TEST(ParallelForTest, RethrowsWorkerException) {
  EXPECT_THROW(parallelFor(100, 4,
                           [](std::size_t b, std::size_t) {
                             if (b > 0) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
}

}  // namespace
}  // namespace intorder

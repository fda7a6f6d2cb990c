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

#include "intorder/simulation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "intorder/error.hpp"

namespace intorder {
namespace {

struct Moments {
  double meanC = 0, meanL = 0, varC = 0, varL = 0, cov = 0;
  double corr() const { return cov / std::sqrt(varC * varL); }
};

Moments moments(const std::vector<CenterLogRange>& v) {
  Moments m;
  const double n = static_cast<double>(v.size());
  for (const auto& p : v) {
    m.meanC += p.center;
    m.meanL += p.logRange;
  }
  m.meanC /= n;
  m.meanL /= n;
  for (const auto& p : v) {
    const double dc = p.center - m.meanC;
    const double dl = p.logRange - m.meanL;
    m.varC += dc * dc;
    m.varL += dl * dl;
    m.cov += dc * dl;
  }
  m.varC /= n - 1;
  m.varL /= n - 1;
  m.cov /= n - 1;
  return m;
}

TEST(GeneratorTest, NormalIndependentCase) {
  CounterRng rng(1);
  const auto m = moments(sampleBivariateNormal({Family::Normal, 0, 0, 0.0},
                                               1'000'000, rng));
  EXPECT_NEAR(m.corr(), 0.0, 0.005);
  EXPECT_NEAR(m.varC, 1.0, 0.01);
  EXPECT_NEAR(m.varL, 1.0, 0.01);
}

TEST(GeneratorTest, NormalCorrelatedCase) {
  CounterRng rng(2);
  const auto m = moments(sampleBivariateNormal({Family::Normal, 0, 0, 0.8},
                                               1'000'000, rng));
  EXPECT_NEAR(m.corr(), 0.8, 0.005);
}

TEST(GeneratorTest, NormalLocationShift) {
  CounterRng rng(3);
  const auto m = moments(sampleBivariateNormal({Family::Normal, 1.0, 0, 0.4},
                                               1'000'000, rng));
  EXPECT_NEAR(m.meanC, 1.0, 0.005);
  EXPECT_NEAR(m.meanL, 0.0, 0.005);
}

TEST(GeneratorTest, StudentTMeanAndCovariance) {
  // Covariance of the scale-matrix construction is (5 / 3) Sigma.
  CounterRng rng(4);
  const auto m = moments(sampleBivariateT({Family::TDf5, 0.5, -0.25, 0.4},
                                          1'000'000, rng));
  EXPECT_NEAR(m.meanC, 0.5, 0.01);
  EXPECT_NEAR(m.meanL, -0.25, 0.01);
  EXPECT_NEAR(m.varC, 5.0 / 3.0, 0.04);
  EXPECT_NEAR(m.varL, 5.0 / 3.0, 0.04);
  EXPECT_NEAR(m.cov, 0.4 * 5.0 / 3.0, 0.03);
  EXPECT_NEAR(m.corr(), 0.4, 0.01);
}

TEST(GeneratorTest, StudentTKurtosis) {
  // Marginal kurtosis of t5 is 3 (nu - 2) / (nu - 4) = 9. The eighth moment is
  // infinite, so the sample kurtosis converges slowly.
  CounterRng rng(10);
  const auto v = sampleBivariateT({Family::TDf5, 0, 0, 0.4}, 1'000'000, rng);
  double m2 = 0;
  double m4 = 0;
  for (const auto& p : v) {
    const double c2 = p.center * p.center;
    m2 += c2;
    m4 += c2 * c2;
  }
  m2 /= v.size();
  m4 /= v.size();
  EXPECT_NEAR(m4 / (m2 * m2), 9.0, 1.5);
}

TEST(GeneratorTest, StudentTHasHeavierTails) {
  // Pr(|T5| > 3) = 0.0301 versus 0.0027 for the normal.
  CounterRng rng(5);
  const auto v = sampleBivariateT({Family::TDf5, 0, 0, 0.0}, 400'000, rng);
  std::size_t far = 0;
  for (const auto& p : v) far += std::abs(p.center) > 3.0;
  EXPECT_NEAR(static_cast<double>(far) / v.size(), 0.0301, 0.002);
}

TEST(GeneratorTest, RejectsBadSpecs) {
  CounterRng rng(6);
  EXPECT_THROW(sampleBivariateNormal({Family::Normal, 0, 0, 1.0}, 5, rng),
               Error);
  EXPECT_THROW(sampleBivariateNormal({Family::TDf5, 0, 0, 0.0}, 5, rng), Error);
  EXPECT_THROW(sampleBivariateT({Family::Normal, 0, 0, 0.0}, 5, rng), Error);
  EXPECT_THROW(sampleCenterLogRange({Family::TDf5, 0, 0, -1.5}, 5, rng), Error);
}

TEST(GeneratorTest, StreamsAreReproducible) {
  CounterRng a(77);
  CounterRng b(77);
  const GeneratorSpec spec{Family::TDf5, 0, 0, 0.8};
  const auto va = sampleCenterLogRange(spec, 100, a);
  const auto vb = sampleCenterLogRange(spec, 100, b);
  for (std::size_t i = 0; i < va.size(); ++i) {
    EXPECT_EQ(va[i].center, vb[i].center);
    EXPECT_EQ(va[i].logRange, vb[i].logRange);
  }
}

TEST(ToIntervalsTest, Examples) {
  const std::vector<CenterLogRange> pairs = {{0, 0}, {2, std::log(3.0)}};
  const auto s = toIntervals(pairs, "p");
  EXPECT_EQ(s[0], Interval(-1, 1));
  EXPECT_DOUBLE_EQ(s[1].lower(), -1.0);
  EXPECT_DOUBLE_EQ(s[1].upper(), 5.0);
  EXPECT_EQ(s.label(), "p");
  const std::vector<CenterLogRange> huge = {{0, 800}};
  try {
    toIntervals(huge);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "half-range overflow");
  }
}

TEST(ToIntervalsTest, GeneratedIntervalsAreValid) {
  CounterRng rng(8);
  const auto pairs = sampleBivariateT({Family::TDf5, 0, 0, 0.8}, 100000, rng);
  const auto s = toIntervals(pairs);
  for (const auto& x : s) EXPECT_LT(x.lower(), x.upper());
}

TEST(MahalanobisTest, Values) {
  EXPECT_EQ(mahalanobisEffect(0.7, 0.0), 0.7 * 0.7);
  EXPECT_NEAR(mahalanobisEffect(1.0, 0.4), 1.1905, 5e-5);
  EXPECT_NEAR(mahalanobisEffect(1.0, 0.8), 2.7778, 5e-5);
  EXPECT_NEAR(mahalanobisEffect(0.5, 0.8), 2.7778 * 0.25, 5e-5);
  EXPECT_THROW(mahalanobisEffect(1.0, 1.0), Error);
  EXPECT_THROW(mahalanobisEffect(1.0, -1.2), Error);
}

TEST(MethodNamesTest, RoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parseMethod(toString(m)), m);
  EXPECT_EQ(parseMethod("b-ks"), Method::BKs);
  EXPECT_FALSE(parseMethod("wilcoxon"));
  EXPECT_EQ(parseFamily("t5"), Family::TDf5);
  EXPECT_EQ(parseFamily("normal"), Family::Normal);
  EXPECT_FALSE(parseFamily("cauchy"));
}

TEST(ScenarioTest, Validation) {
  Scenario s;
  EXPECT_NO_THROW(validateScenario(s));
  auto bad = [](auto mutate) {
    Scenario t;
    mutate(t);
    EXPECT_THROW(validateScenario(t), Error);
  };
  bad([](Scenario& t) { t.correlation = 1.0; });
  bad([](Scenario& t) { t.delta = -0.1; });
  bad([](Scenario& t) { t.m = 0; });
  bad([](Scenario& t) { t.replicates = 0; });
  bad([](Scenario& t) { t.alpha = 0.0; });
  bad([](Scenario& t) { t.methods.clear(); });
  bad([](Scenario& t) { t.permutations = 0; });
  bad([](Scenario& t) { t.m = 2; });
  Scenario small;
  small.m = 2;
  small.methods = {Method::UPerm};
  EXPECT_NO_THROW(validateScenario(small));
}

Scenario quick(double delta, std::uint64_t replicates = 60) {
  Scenario s;
  s.m = 12;
  s.n = 10;
  s.delta = delta;
  s.correlation = 0.4;
  s.replicates = replicates;
  s.permutations = 99;
  return s;
}

TEST(RunScenarioTest, DeterministicAcrossThreadCounts) {
  const auto serial = runScenario(quick(0.5), 42, 1);
  for (unsigned threads : {2u, 3u, 7u}) {
    auto parallel = runScenario(quick(0.5), 42, threads);
    parallel.elapsedSeconds = serial.elapsedSeconds;
    EXPECT_EQ(parallel, serial);
  }
  auto again = runScenario(quick(0.5), 42, 1);
  again.elapsedSeconds = serial.elapsedSeconds;
  EXPECT_EQ(again, serial);
}

TEST(RunScenarioTest, RatesAndStandardErrors) {
  const auto r = runScenario(quick(1.0, 80), 3, 2);
  ASSERT_EQ(r.methods.size(), 3u);
  for (const auto& mp : r.methods) {
    EXPECT_DOUBLE_EQ(mp.rate, mp.rejections / 80.0);
    EXPECT_DOUBLE_EQ(mp.standardError,
                     std::sqrt(mp.rate * (1 - mp.rate) / 80.0));
  }
  EXPECT_NE(r.find(Method::BKs), nullptr);
  EXPECT_EQ(r.seed, 3u);
}

TEST(RunScenarioTest, SingleReplicate) {
  const auto r = runScenario(quick(0.3, 1), 9, 1);
  for (const auto& mp : r.methods) {
    EXPECT_TRUE(mp.rate == 0.0 || mp.rate == 1.0);
    EXPECT_EQ(mp.standardError, 0.0);
  }
}

TEST(RunScenarioTest, MethodSubsetUsesSameStreams) {
  // Per-method substreams make each rate independent of the other methods.
  Scenario all = quick(0.5);
  Scenario only = all;
  only.methods = {Method::BKs};
  const auto a = runScenario(all, 5, 2);
  const auto b = runScenario(only, 5, 2);
  EXPECT_EQ(a.find(Method::BKs)->rejections, b.methods[0].rejections);
}

TEST(RunScenarioTest, PowerIncreasesWithShift) {
  Scenario s = quick(0.0, 300);
  s.methods = {Method::UAsym};
  double previous = -1.0;
  for (double delta : {0.0, 0.5, 1.0, 2.0}) {
    s.delta = delta;
    const double rate = runScenario(s, 11, 2).methods[0].rate;
    EXPECT_GT(rate, previous - 0.03);
    previous = rate;
  }
  EXPECT_GT(previous, 0.9);
}

TEST(RunScenarioTest, PowerIncreasesWithCorrelation) {
  Scenario s = quick(0.5, 400);
  s.methods = {Method::UAsym, Method::BKs};
  std::vector<double> asym;
  std::vector<double> ks;
  for (double rho : {0.0, 0.4, 0.8}) {
    s.correlation = rho;
    const auto r = runScenario(s, 12, 2);
    asym.push_back(r.methods[0].rate);
    ks.push_back(r.methods[1].rate);
  }
  // Two standard errors of a difference at 400 replicates is about 0.07.
  EXPECT_GT(asym[1], asym[0] - 0.07);
  EXPECT_GT(asym[2], asym[1] - 0.07);
  EXPECT_GT(asym[2], asym[0]);
  EXPECT_GT(ks[2], ks[0]);
}

TEST(RunScenarioTest, UPermutationSizeAtSmallSamples) {
  // Size of the U permutation test under the null, 2000 replicates.
  Scenario s;
  s.m = 10;
  s.n = 10;
  s.replicates = 2000;
  s.permutations = 499;
  s.methods = {Method::UPerm};
  const double rate = runScenario(s, 31, 0).methods[0].rate;
  EXPECT_GE(rate, 0.035);
  EXPECT_LE(rate, 0.065);
}

TEST(PowerGridTest, Layout) {
  const Family both[] = {Family::Normal, Family::TDf5};
  const auto cells = powerGridScenarios(both, PowerGrid::kSizes, Scenario{});
  ASSERT_EQ(cells.size(), 96u);
  EXPECT_EQ(cells.front().family, Family::Normal);
  EXPECT_EQ(cells.front().m, 30u);
  EXPECT_EQ(cells.front().delta, 0.0);
  EXPECT_EQ(cells[1].correlation, 0.4);
  EXPECT_EQ(cells[3].delta, 0.3);
  EXPECT_EQ(cells.back().family, Family::TDf5);
  EXPECT_EQ(cells.back().n, 200u);
  EXPECT_EQ(cells.back().delta, 1.0);
  EXPECT_EQ(cells.back().correlation, 0.8);

  const Family normal[] = {Family::Normal};
  const std::pair<std::size_t, std::size_t> one[] = {{30, 30}};
  EXPECT_EQ(powerGridScenarios(normal, one, Scenario{}).size(), 12u);
}

}  // namespace
}  // namespace intorder

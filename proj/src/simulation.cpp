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

#include <algorithm>
#include <chrono>
#include <cmath>

#include "intorder/error.hpp"
#include "intorder/parallel.hpp"
#include "intorder/permutation.hpp"
#include "intorder/u_test.hpp"

namespace intorder {
namespace {

constexpr double kTDegrees = 5.0;

void requireCorrelation(double rho) {
  if (!(std::abs(rho) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "correlation must satisfy |rho| < 1");
  }
}

// Z ~ N(0, [[1, rho], [rho, 1]]) through the lower Cholesky factor.
std::array<double, 2> correlatedNormals(double rho, double complement,
                                        CounterRng& rng) {
  const auto [a, b] = standardNormals(rng);
  return {a, rho * a + complement * b};
}

enum StreamTag : std::uint64_t {
  kStreamX = 0,
  kStreamY = 1,
  kStreamUPerm = 2,
  kStreamKs = 3,
};

}  // namespace

const char* toString(Family family) noexcept {
  return family == Family::Normal ? "normal" : "t5";
}

std::optional<Family> parseFamily(const std::string& text) {
  if (text == "normal" || text == "N" || text == "n") return Family::Normal;
  if (text == "t" || text == "t5" || text == "T") return Family::TDf5;
  return std::nullopt;
}

const char* toString(Method method) noexcept {
  switch (method) {
    case Method::UPerm:
      return "u-perm";
    case Method::UAsym:
      return "u-asym";
    case Method::BKs:
      return "ks-perm";
  }
  return "unknown";
}

std::optional<Method> parseMethod(const std::string& text) {
  if (text == "u-perm") return Method::UPerm;
  if (text == "u-asym") return Method::UAsym;
  if (text == "ks-perm" || text == "b-ks") return Method::BKs;
  return std::nullopt;
}

std::vector<CenterLogRange> sampleBivariateNormal(const GeneratorSpec& spec,
                                                  std::size_t count,
                                                  CounterRng& rng) {
  if (spec.family != Family::Normal) {
    throw Error(ErrorKind::InvalidArgument, "generator family is not normal");
  }
  requireCorrelation(spec.correlation);
  const double complement =
      std::sqrt(1.0 - spec.correlation * spec.correlation);
  std::vector<CenterLogRange> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto z = correlatedNormals(spec.correlation, complement, rng);
    out.push_back({spec.muCenter + z[0], spec.muLogRange + z[1]});
  }
  return out;
}

std::vector<CenterLogRange> sampleBivariateT(const GeneratorSpec& spec,
                                             std::size_t count,
                                             CounterRng& rng) {
  if (spec.family != Family::TDf5) {
    throw Error(ErrorKind::InvalidArgument, "generator family is not t5");
  }
  requireCorrelation(spec.correlation);
  const double complement =
      std::sqrt(1.0 - spec.correlation * spec.correlation);
  std::vector<CenterLogRange> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto z = correlatedNormals(spec.correlation, complement, rng);
    const auto g1 = standardNormals(rng);
    const auto g2 = standardNormals(rng);
    const auto g3 = standardNormals(rng);
    const double chiSquare = g1[0] * g1[0] + g1[1] * g1[1] + g2[0] * g2[0] +
                             g2[1] * g2[1] + g3[0] * g3[0];
    const double scale = std::sqrt(kTDegrees / chiSquare);
    out.push_back(
        {spec.muCenter + z[0] * scale, spec.muLogRange + z[1] * scale});
  }
  return out;
}

std::vector<CenterLogRange> sampleCenterLogRange(const GeneratorSpec& spec,
                                                 std::size_t count,
                                                 CounterRng& rng) {
  return spec.family == Family::Normal ? sampleBivariateNormal(spec, count, rng)
                                       : sampleBivariateT(spec, count, rng);
}

IntervalSample toIntervals(std::span<const CenterLogRange> pairs,
                           std::string label) {
  std::vector<Interval> intervals;
  intervals.reserve(pairs.size());
  for (const auto& p : pairs) {
    const double halfRange = std::exp(p.logRange);
    const double lower = p.center - halfRange;
    const double upper = p.center + halfRange;
    if (!std::isfinite(halfRange) || !std::isfinite(lower) ||
        !std::isfinite(upper) || !(lower < upper)) {
      throw Error(ErrorKind::InvalidArgument, "half-range overflow");
    }
    intervals.emplace_back(lower, upper);
  }
  return IntervalSample(std::move(intervals), std::move(label));
}

void validateScenario(const Scenario& s) {
  requireCorrelation(s.correlation);
  if (!std::isfinite(s.delta) || s.delta < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "delta must be finite and >= 0");
  }
  if (s.m < 1 || s.n < 1) {
    throw Error(ErrorKind::InvalidArgument, "sample sizes must be positive");
  }
  if (s.replicates < 1) {
    throw Error(ErrorKind::InvalidArgument, "replicates must be at least 1");
  }
  if (!(s.alpha > 0.0 && s.alpha < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0, 1)");
  }
  if (s.methods.empty()) {
    throw Error(ErrorKind::InvalidArgument, "no methods requested");
  }
  const bool permuted =
      std::any_of(s.methods.begin(), s.methods.end(),
                  [](Method m) { return m != Method::UAsym; });
  if (permuted && s.permutations < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "permutation count must be at least 1");
  }
  const bool asymptotic = std::find(s.methods.begin(), s.methods.end(),
                                    Method::UAsym) != s.methods.end();
  if (asymptotic && (s.m < 3 || s.n < 3)) {
    throw Error(ErrorKind::InvalidArgument,
                "u-asym needs at least 3 observations per sample");
  }
}

const MethodPower* PowerReport::find(Method method) const noexcept {
  for (const auto& mp : methods) {
    if (mp.method == method) return &mp;
  }
  return nullptr;
}

PowerReport runScenario(const Scenario& scenario, std::uint64_t seed,
                        unsigned threads) {
  validateScenario(scenario);
  const auto start = std::chrono::steady_clock::now();

  const GeneratorSpec first{scenario.family, 0.0, 0.0, scenario.correlation};
  const GeneratorSpec second{scenario.family, scenario.delta, 0.0,
                             scenario.correlation};
  const std::size_t methodCount = scenario.methods.size();

  // rejected[r * methodCount + k]
  std::vector<std::uint8_t> rejected(scenario.replicates * methodCount, 0);
  parallelFor(
      scenario.replicates, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
          const std::uint64_t base = deriveKey(seed, r);
          CounterRng xStream(deriveKey(base, kStreamX));
          CounterRng yStream(deriveKey(base, kStreamY));
          const auto x = toIntervals(
              sampleCenterLogRange(first, scenario.m, xStream), "X");
          const auto y = toIntervals(
              sampleCenterLogRange(second, scenario.n, yStream), "Y");
          for (std::size_t k = 0; k < methodCount; ++k) {
            double p = 1.0;
            switch (scenario.methods[k]) {
              case Method::UAsym:
                p = asymptoticTest(x, y).pValue;
                break;
              case Method::UPerm:
                p = permutationTest(x, y,
                                    {scenario.permutations,
                                     deriveKey(base, kStreamUPerm),
                                     StatisticKind::UStatistic, 1})
                        .pValue;
                break;
              case Method::BKs:
                p = permutationTest(x, y,
                                    {scenario.permutations,
                                     deriveKey(base, kStreamKs),
                                     StatisticKind::KsDPlus, 1})
                        .pValue;
                break;
            }
            rejected[r * methodCount + k] = p <= scenario.alpha;
          }
        }
      });

  PowerReport report;
  report.scenario = scenario;
  report.seed = seed;
  const double reps = static_cast<double>(scenario.replicates);
  for (std::size_t k = 0; k < methodCount; ++k) {
    MethodPower mp{scenario.methods[k]};
    for (std::size_t r = 0; r < scenario.replicates; ++r) {
      mp.rejections += rejected[r * methodCount + k];
    }
    mp.rate = static_cast<double>(mp.rejections) / reps;
    mp.standardError = std::sqrt(mp.rate * (1.0 - mp.rate) / reps);
    report.methods.push_back(mp);
  }
  report.elapsedSeconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  return report;
}

double mahalanobisEffect(double delta, double rho) {
  requireCorrelation(rho);
  return delta * delta / (1.0 - rho * rho);
}

std::vector<Scenario> powerGridScenarios(
    std::span<const Family> families,
    std::span<const std::pair<std::size_t, std::size_t>> sizes,
    const Scenario& base) {
  std::vector<Scenario> cells;
  for (Family family : families) {
    for (const auto& [m, n] : sizes) {
      for (double delta : PowerGrid::kDeltas) {
        for (double rho : PowerGrid::kCorrelations) {
          Scenario s = base;
          s.family = family;
          s.m = m;
          s.n = n;
          s.delta = delta;
          s.correlation = rho;
          cells.push_back(s);
        }
      }
    }
  }
  return cells;
}

}  // namespace intorder

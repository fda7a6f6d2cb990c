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

// Monte Carlo power study on the center/log-range model.
//
// (C, log R) is drawn from a bivariate normal or a bivariate t with 5
// degrees of freedom, both with unit-diagonal matrix [[1, rho], [rho, 1]],
// and mapped to the interval (C - R, C + R]. For the t family that matrix is
// the scale matrix: draws are mu + Z sqrt(5 / W) with Z ~ N(0, Sigma) and
// W ~ chi-square(5), so the covariance is (5/3) Sigma.
//
// Stream layout for runScenario(seed): replicate r owns
// base = deriveKey(seed, r); X data uses deriveKey(base, 0), Y data
// deriveKey(base, 1), the U permutation plan seed deriveKey(base, 2) and the
// K-S plan seed deriveKey(base, 3). Normals come from Box-Muller pairs
// (first normal drives C); the chi-square is a sum of five squared normals
// taken from three fresh pairs.

#ifndef INTORDER_SIMULATION_HPP
#define INTORDER_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intorder/interval.hpp"
#include "intorder/rng.hpp"

namespace intorder {

enum class Family { Normal, TDf5 };

const char* toString(Family family) noexcept;
std::optional<Family> parseFamily(const std::string& text);

struct GeneratorSpec {
  Family family = Family::Normal;
  double muCenter = 0.0;
  double muLogRange = 0.0;
  double correlation = 0.0;  // |rho| < 1
};

struct CenterLogRange {
  double center;
  double logRange;
};

/// Throws Error(InvalidArgument) unless |correlation| < 1 and family is
/// Normal.
std::vector<CenterLogRange> sampleBivariateNormal(const GeneratorSpec& spec,
                                                  std::size_t count,
                                                  CounterRng& rng);

/// Throws Error(InvalidArgument) unless |correlation| < 1 and family is TDf5.
std::vector<CenterLogRange> sampleBivariateT(const GeneratorSpec& spec,
                                             std::size_t count,
                                             CounterRng& rng);

/// Dispatches on spec.family.
std::vector<CenterLogRange> sampleCenterLogRange(const GeneratorSpec& spec,
                                                 std::size_t count,
                                                 CounterRng& rng);

/// R = exp(logR); throws Error(InvalidArgument) "half-range overflow" when R
/// or an endpoint is not finite.
IntervalSample toIntervals(std::span<const CenterLogRange> pairs,
                           std::string label = {});

enum class Method { UPerm, UAsym, BKs };

const char* toString(Method method) noexcept;
std::optional<Method> parseMethod(const std::string& text);

inline constexpr Method kAllMethods[] = {Method::UPerm, Method::UAsym,
                                         Method::BKs};

/// One cell of the power grid. X comes from mean (0, 0), Y from mean
/// (delta, 0), both with the same correlation.
struct Scenario {
  Family family = Family::Normal;
  double delta = 0.0;
  double correlation = 0.0;
  std::size_t m = 30;
  std::size_t n = 30;
  std::uint64_t replicates = 2000;
  double alpha = 0.05;
  std::uint64_t permutations = 2000;
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws Error(InvalidArgument) on an unusable scenario.
void validateScenario(const Scenario& scenario);

struct MethodPower {
  Method method;
  std::uint64_t rejections = 0;
  double rate = 0.0;
  double standardError = 0.0;  // sqrt(rate (1 - rate) / replicates)

  friend bool operator==(const MethodPower&, const MethodPower&) = default;
};

struct PowerReport {
  Scenario scenario;
  std::uint64_t seed = 0;
  std::vector<MethodPower> methods;
  double elapsedSeconds = 0.0;

  const MethodPower* find(Method method) const noexcept;

  friend bool operator==(const PowerReport&, const PowerReport&) = default;
};

/// Deterministic in (scenario, seed); `threads` only changes wall time.
PowerReport runScenario(const Scenario& scenario, std::uint64_t seed,
                        unsigned threads = 1);

/// delta^2 / (1 - rho^2), the Mahalanobis distance between (0, 0) and
/// (delta, 0) under [[1, rho], [rho, 1]]. Throws for |rho| >= 1.
double mahalanobisEffect(double delta, double rho);

/// Standard power grid: 2 families x 4 size pairs x 4 deltas x 3 correlations.
struct PowerGrid {
  static constexpr std::pair<std::size_t, std::size_t> kSizes[] = {
      {30, 30}, {30, 120}, {50, 50}, {50, 200}};
  static constexpr double kDeltas[] = {0.0, 0.3, 0.5, 1.0};
  static constexpr double kCorrelations[] = {0.0, 0.4, 0.8};
};

/// Cells of the grid for the given families and size pairs, ordered by
/// family, size, delta, correlation.
std::vector<Scenario> powerGridScenarios(
    std::span<const Family> families,
    std::span<const std::pair<std::size_t, std::size_t>> sizes,
    const Scenario& base);

}  // namespace intorder

#endif  // INTORDER_SIMULATION_HPP

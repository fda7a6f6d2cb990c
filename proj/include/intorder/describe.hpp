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

#ifndef INTORDER_DESCRIBE_HPP
#define INTORDER_DESCRIBE_HPP

#include <array>
#include <cstddef>
#include <string>

#include "intorder/interval.hpp"

namespace intorder {

enum class Feature { Center, Lower, Upper, HalfRange };

inline constexpr std::array<Feature, 4> kFeatures = {
    Feature::Center, Feature::Lower, Feature::Upper, Feature::HalfRange};

const char* toString(Feature feature) noexcept;

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // n - 1 denominator; NaN for n < 2
};

struct SampleSummary {
  std::string label;
  std::size_t size = 0;
  std::array<MeanSd, 4> features;  // indexed like kFeatures

  const MeanSd& operator[](Feature f) const {
    return features[static_cast<std::size_t>(f)];
  }
};

SampleSummary summarize(const IntervalSample& sample);

/// One-sided Welch t-test p-value for "mean of y exceeds mean of x".
/// NaN when the standard error is zero and the means coincide, or a sample
/// has fewer than two observations.
double welchUpperPValue(const MeanSd& x, std::size_t m, const MeanSd& y,
                        std::size_t n);

struct Description {
  SampleSummary x;
  SampleSummary y;
  std::array<double, 4> welchPValues{};  // indexed like kFeatures
};

Description describeSamples(const IntervalSample& x, const IntervalSample& y);

}  // namespace intorder

#endif  // INTORDER_DESCRIBE_HPP

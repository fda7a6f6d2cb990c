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

#include "intorder/describe.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

namespace intorder {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double featureValue(const Interval& x, Feature f) {
  switch (f) {
    case Feature::Center:
      return x.center();
    case Feature::Lower:
      return x.lower();
    case Feature::Upper:
      return x.upper();
    case Feature::HalfRange:
      return x.halfRange();
  }
  return kNaN;
}

}  // namespace

const char* toString(Feature feature) noexcept {
  switch (feature) {
    case Feature::Center:
      return "center";
    case Feature::Lower:
      return "lower";
    case Feature::Upper:
      return "upper";
    case Feature::HalfRange:
      return "half-range";
  }
  return "unknown";
}

SampleSummary summarize(const IntervalSample& sample) {
  SampleSummary out;
  out.label = sample.label();
  out.size = sample.size();
  for (Feature f : kFeatures) {
    // Welford's update.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (const Interval& x : sample) {
      const double v = featureValue(x, f);
      ++k;
      const double d = v - mean;
      mean += d / static_cast<double>(k);
      m2 += d * (v - mean);
    }
    MeanSd& slot = out.features[static_cast<std::size_t>(f)];
    slot.mean = k > 0 ? mean : kNaN;
    slot.sd = k > 1 ? std::sqrt(m2 / static_cast<double>(k - 1)) : kNaN;
  }
  return out;
}

double welchUpperPValue(const MeanSd& x, std::size_t m, const MeanSd& y,
                        std::size_t n) {
  if (m < 2 || n < 2) return kNaN;
  const double vx = x.sd * x.sd / static_cast<double>(m);
  const double vy = y.sd * y.sd / static_cast<double>(n);
  const double se2 = vx + vy;
  const double diff = y.mean - x.mean;
  if (!(se2 > 0.0)) {
    if (diff > 0.0) return 0.0;
    if (diff < 0.0) return 1.0;
    return kNaN;
  }
  const double t = diff / std::sqrt(se2);
  const double df = se2 * se2 /
                    (vx * vx / static_cast<double>(m - 1) +
                     vy * vy / static_cast<double>(n - 1));
  const boost::math::students_t dist(df);
  return boost::math::cdf(boost::math::complement(dist, t));
}

Description describeSamples(const IntervalSample& x, const IntervalSample& y) {
  Description d;
  d.x = summarize(x);
  d.y = summarize(y);
  for (Feature f : kFeatures) {
    d.welchPValues[static_cast<std::size_t>(f)] =
        welchUpperPValue(d.x[f], d.x.size, d.y[f], d.y.size);
  }
  return d;
}

}  // namespace intorder

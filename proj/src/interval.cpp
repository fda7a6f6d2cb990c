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

#include "intorder/interval.hpp"

#include <cmath>
#include <sstream>

#include "intorder/error.hpp"

namespace intorder {

Interval::Interval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw Error(ErrorKind::InvalidArgument, "interval bounds must be finite");
  }
  if (!(lower < upper)) {
    throw Error(ErrorKind::InvalidArgument,
                lower == upper ? "degenerate interval: lower == upper"
                               : "reversed bounds: lower > upper");
  }
}

const char* toString(OrderRelation relation) noexcept {
  switch (relation) {
    case OrderRelation::Less:
      return "less";
    case OrderRelation::Greater:
      return "greater";
    case OrderRelation::ContainsOther:
      return "contains";
    case OrderRelation::ContainedInOther:
      return "contained";
    case OrderRelation::TiedEndpoint:
      return "tied";
  }
  return "unknown";
}

OrderRelation compare(const Interval& x, const Interval& y) noexcept {
  if (x.lower() == y.lower() || x.upper() == y.upper()) {
    return OrderRelation::TiedEndpoint;
  }
  const bool lowerBelow = x.lower() < y.lower();
  const bool upperBelow = x.upper() < y.upper();
  if (lowerBelow && upperBelow) return OrderRelation::Less;
  if (!lowerBelow && !upperBelow) return OrderRelation::Greater;
  return lowerBelow ? OrderRelation::ContainsOther
                    : OrderRelation::ContainedInOther;
}

CenterRange toCenterRange(const Interval& x) noexcept {
  return {x.center(), x.halfRange()};
}

Interval fromCenterRange(const CenterRange& c) {
  if (!std::isfinite(c.center) || !std::isfinite(c.halfRange)) {
    throw Error(ErrorKind::InvalidArgument,
                "center and half-range must be finite");
  }
  if (!(c.halfRange > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "half-range must be positive");
  }
  return Interval(c.center - c.halfRange, c.center + c.halfRange);
}

std::string SampleValidation::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (i > 0) out << "; ";
    out << errors[i].message;
  }
  return out.str();
}

std::optional<std::string> rowProblem(double lower, double upper,
                                      std::size_t row) {
  const std::string where = " at row " + std::to_string(row);
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    return "non-finite value" + where;
  }
  if (lower == upper) return "degenerate interval" + where;
  if (lower > upper) return "reversed bounds" + where;
  return std::nullopt;
}

SampleValidation validateSample(
    std::span<const std::pair<double, double>> raw, std::string label) {
  SampleValidation result;
  if (raw.empty()) {
    result.errors.push_back({0, "empty sample"});
    return result;
  }
  std::vector<Interval> observations;
  observations.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto [lower, upper] = raw[i];
    if (auto problem = rowProblem(lower, upper, i + 1)) {
      result.errors.push_back({i + 1, std::move(*problem)});
    } else if (result.errors.empty()) {
      observations.emplace_back(lower, upper);
    }
  }
  if (result.errors.empty()) {
    result.sample = IntervalSample(std::move(observations), std::move(label));
  }
  return result;
}

IntervalSample makeSample(std::span<const std::pair<double, double>> raw,
                          std::string label) {
  auto validation = validateSample(raw, std::move(label));
  if (!validation.ok()) {
    throw Error(ErrorKind::Parse, validation.summary());
  }
  return std::move(validation.sample);
}

}  // namespace intorder

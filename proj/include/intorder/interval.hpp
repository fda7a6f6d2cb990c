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

// Interval observations (lower, upper] and the strict componentwise order
// between them.
//
// x < y holds when both endpoints of x lie strictly below the matching
// endpoints of y. Seen from a fixed interval x in the (lower, upper)
// half-plane, every other interval is either greater (region A), contains x
// (region B), is less (region C), or is contained in x (region D). A shared
// endpoint leaves the pair unordered and is reported separately.

#ifndef INTORDER_INTERVAL_HPP
#define INTORDER_INTERVAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace intorder {

class Interval {
 public:
  /// Throws Error(InvalidArgument) unless both bounds are finite and
  /// lower < upper.
  Interval(double lower, double upper);

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double center() const noexcept { return 0.5 * (lower_ + upper_); }
  double halfRange() const noexcept { return 0.5 * (upper_ - lower_); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lower_;
  double upper_;
};

/// Relation of the first interval to the second.
enum class OrderRelation {
  Less,              // x < y
  Greater,           // x > y
  ContainsOther,     // y strictly inside x
  ContainedInOther,  // x strictly inside y
  TiedEndpoint,      // lower or upper endpoints coincide
};

const char* toString(OrderRelation relation) noexcept;

OrderRelation compare(const Interval& x, const Interval& y) noexcept;

/// +1 if x < y, -1 if x > y, 0 otherwise.
inline int orderSign(const Interval& x, const Interval& y) noexcept {
  const int less = (x.lower() < y.lower()) & (x.upper() < y.upper());
  const int greater = (x.lower() > y.lower()) & (x.upper() > y.upper());
  return less - greater;
}

/// x < y in the strict componentwise order.
inline bool precedes(const Interval& x, const Interval& y) noexcept {
  return x.lower() < y.lower() && x.upper() < y.upper();
}

struct CenterRange {
  double center;
  double halfRange;
};

CenterRange toCenterRange(const Interval& x) noexcept;

/// Throws Error(InvalidArgument) when halfRange <= 0 or either field is not
/// finite.
Interval fromCenterRange(const CenterRange& c);

class IntervalSample {
 public:
  IntervalSample() = default;
  explicit IntervalSample(std::vector<Interval> observations,
                          std::string label = {})
      : observations_(std::move(observations)), label_(std::move(label)) {}

  std::span<const Interval> observations() const noexcept {
    return observations_;
  }
  const Interval& operator[](std::size_t i) const { return observations_[i]; }
  std::size_t size() const noexcept { return observations_.size(); }
  bool empty() const noexcept { return observations_.empty(); }
  const std::string& label() const noexcept { return label_; }

  auto begin() const noexcept { return observations_.begin(); }
  auto end() const noexcept { return observations_.end(); }

 private:
  std::vector<Interval> observations_;
  std::string label_;
};

struct RowError {
  std::size_t row;  // 1-based
  std::string message;
};

struct SampleValidation {
  IntervalSample sample;
  std::vector<RowError> errors;

  bool ok() const noexcept { return errors.empty(); }
  /// All messages joined with "; ".
  std::string summary() const;
};

/// Problem with one raw (lower, upper) row, if any; `row` is 1-based and
/// only used in the message.
std::optional<std::string> rowProblem(double lower, double upper,
                                      std::size_t row);

/// Checks every (lower, upper) row. Any bad row or an empty input fails the
/// whole sample; `sample` is only meaningful when ok().
SampleValidation validateSample(
    std::span<const std::pair<double, double>> raw, std::string label = {});

/// Like validateSample but throws Error(Parse) with the joined messages.
IntervalSample makeSample(std::span<const std::pair<double, double>> raw,
                          std::string label = {});

}  // namespace intorder

#endif  // INTORDER_INTERVAL_HPP

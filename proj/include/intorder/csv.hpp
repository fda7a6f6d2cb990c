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

// Interval CSV files.
//
//   # comment lines start with '#', blank lines are skipped
//   lower,upper
//   56.0,100.0
//   ...
//
// The header is required and matched case-insensitively. Exactly two
// numeric columns per row, dot decimal separator regardless of locale.
// Row numbers in error messages count data rows from 1, the same numbering
// validateSample uses.

#ifndef INTORDER_CSV_HPP
#define INTORDER_CSV_HPP

#include <string>
#include <string_view>

#include "intorder/interval.hpp"

namespace intorder {

/// Throws Error(Parse) listing every bad row.
IntervalSample parseIntervalCsv(std::string_view text, std::string label = {});

/// Throws Error(Io) when the file cannot be read, else as parseIntervalCsv.
IntervalSample readIntervalCsv(const std::string& path, std::string label = {});

/// Inverse of parseIntervalCsv, with values printed to round-trip.
std::string formatIntervalCsv(const IntervalSample& sample);

}  // namespace intorder

#endif  // INTORDER_CSV_HPP

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

#include "intorder/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "intorder/error.hpp"

namespace intorder {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::optional<double> parseReal(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

IntervalSample parseIntervalCsv(std::string_view text, std::string label) {
  std::vector<RowError> errors;
  std::vector<Interval> observations;
  bool headerSeen = false;
  std::size_t row = 0;

  while (!text.empty()) {
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text.remove_prefix(newline == std::string_view::npos ? text.size()
                                                         : newline + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (!headerSeen) {
      std::string header = lowercase(line);
      header.erase(std::remove_if(header.begin(), header.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   header.end());
      if (header != "lower,upper") {
        throw Error(ErrorKind::Parse,
                    "missing header: expected \"lower,upper\"");
      }
      headerSeen = true;
      continue;
    }

    ++row;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      errors.push_back({row, "expected two columns at row " +
                                 std::to_string(row)});
      continue;
    }
    const auto lower = parseReal(line.substr(0, comma));
    const auto upper = parseReal(line.substr(comma + 1));
    if (!lower || !upper) {
      errors.push_back({row, "unparsable number at row " + std::to_string(row)});
      continue;
    }
    if (auto problem = rowProblem(*lower, *upper, row)) {
      errors.push_back({row, std::move(*problem)});
      continue;
    }
    if (errors.empty()) observations.emplace_back(*lower, *upper);
  }

  if (!headerSeen) {
    throw Error(ErrorKind::Parse, "missing header: expected \"lower,upper\"");
  }
  if (row == 0) throw Error(ErrorKind::Parse, "empty sample");
  if (!errors.empty()) {
    SampleValidation report{{}, std::move(errors)};
    throw Error(ErrorKind::Parse, report.summary());
  }
  return IntervalSample(std::move(observations), std::move(label));
}

IntervalSample readIntervalCsv(const std::string& path, std::string label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path);
  try {
    return parseIntervalCsv(buffer.str(), std::move(label));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string formatIntervalCsv(const IntervalSample& sample) {
  std::string out = "lower,upper\n";
  char buf[64];
  for (const Interval& x : sample) {
    auto end = std::to_chars(buf, buf + sizeof buf, x.lower()).ptr;
    *end++ = ',';
    end = std::to_chars(end, buf + sizeof buf, x.upper()).ptr;
    *end++ = '\n';
    out.append(buf, end);
  }
  return out;
}

}  // namespace intorder

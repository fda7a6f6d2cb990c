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

#include "intorder/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <map>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

#include "intorder/error.hpp"
#include "intorder/ks_test.hpp"
#include "intorder/permutation.hpp"

namespace intorder {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double realOrNaN(const Json& j) {
  return j.is_null() ? kNaN : j.get<double>();
}

template <class T>
Json optional(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optionalFrom(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Method methodFrom(const Json& j) {
  const auto method = parseMethod(j.get<std::string>());
  if (!method) throw Error(ErrorKind::Parse, "unknown method in report");
  return *method;
}

template <class F>
auto parsing(std::string_view text, F&& body) {
  try {
    return body(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string cell(double v, int digits) {
  if (!std::isfinite(v)) return "n/a";
  return fmt::format("{:.{}f}", v, digits);
}

std::string pValueText(double p) {
  if (!std::isfinite(p)) return "n/a";
  if (p < 0.001) return fmt::format("< 0.001 ({:.3g})", p);
  return fmt::format("{:.4f}", p);
}

std::string isoTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace

TestReport runTest(const IntervalSample& x, const IntervalSample& y,
                   const TestOptions& options) {
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0, 1)");
  }
  TestReport report;
  report.method = options.method;
  report.alpha = options.alpha;
  report.m = x.size();
  report.n = y.size();
  report.xLabel = x.label();
  report.yLabel = y.label();

  if (options.method == Method::UAsym) {
    const UTestOutcome outcome = asymptoticTest(x, y);
    report.statistic = outcome.t;
    report.pValue = outcome.pValue;
    report.zScore = outcome.zScore;
    report.thetas = outcome.thetas;
  } else {
    const PermutationPlan plan{options.permutations, options.seed,
                               options.method == Method::UPerm
                                   ? StatisticKind::UStatistic
                                   : StatisticKind::KsDPlus,
                               options.threads};
    const PermutationOutcome outcome = permutationTest(x, y, plan);
    report.statistic = outcome.observed;
    report.pValue = outcome.pValue;
    report.seed = options.seed;
    report.permutationCount = outcome.permutationCount;
    report.exceedCount = outcome.exceedCount;
  }
  report.rejected = report.pValue <= options.alpha;
  return report;
}

std::string testReportToJson(const TestReport& r) {
  Json j;
  j["method"] = toString(r.method);
  j["alternative"] = kAlternative;
  j["statistic"] = number(r.statistic);
  j["pValue"] = number(r.pValue);
  j["alpha"] = r.alpha;
  j["rejected"] = r.rejected;
  j["sampleSizes"] = {{"m", r.m}, {"n", r.n}};
  j["labels"] = {{"x", r.xLabel}, {"y", r.yLabel}};
  j["zScore"] = optional(r.zScore);
  if (r.thetas) {
    j["thetas"] = {{"theta1", r.thetas->theta1},
                   {"theta2", r.thetas->theta2},
                   {"theta3", r.thetas->theta3},
                   {"varianceComponent", r.thetas->varianceComponent}};
  } else {
    j["thetas"] = nullptr;
  }
  j["seed"] = optional(r.seed);
  j["permutationCount"] = optional(r.permutationCount);
  j["exceedCount"] = optional(r.exceedCount);
  j["toolVersion"] = r.toolVersion;
  return j.dump(2);
}

TestReport testReportFromJson(std::string_view text) {
  return parsing(text, [](const Json& j) {
    TestReport r;
    r.method = methodFrom(j.at("method"));
    r.statistic = realOrNaN(j.at("statistic"));
    r.pValue = realOrNaN(j.at("pValue"));
    r.alpha = j.at("alpha").get<double>();
    r.rejected = j.at("rejected").get<bool>();
    r.m = j.at("sampleSizes").at("m").get<std::size_t>();
    r.n = j.at("sampleSizes").at("n").get<std::size_t>();
    r.xLabel = j.at("labels").at("x").get<std::string>();
    r.yLabel = j.at("labels").at("y").get<std::string>();
    r.zScore = optionalFrom<double>(j.at("zScore"));
    if (const Json& t = j.at("thetas"); !t.is_null()) {
      ThetaEstimates est;
      est.theta1 = t.at("theta1").get<double>();
      est.theta2 = t.at("theta2").get<double>();
      est.theta3 = t.at("theta3").get<double>();
      est.varianceComponent = t.at("varianceComponent").get<double>();
      r.thetas = est;
    }
    r.seed = optionalFrom<std::uint64_t>(j.at("seed"));
    r.permutationCount = optionalFrom<std::uint64_t>(j.at("permutationCount"));
    r.exceedCount = optionalFrom<std::uint64_t>(j.at("exceedCount"));
    r.toolVersion = j.at("toolVersion").get<std::string>();
    return r;
  });
}

std::string testReportToText(const TestReport& r) {
  std::string out;
  const bool isKs = r.method == Method::BKs;
  out += fmt::format("method        {}\n", toString(r.method));
  out += fmt::format("alternative   {}\n", kAlternative);
  out += fmt::format("samples       X = {} (m = {}), Y = {} (n = {})\n",
                     r.xLabel.empty() ? "x" : r.xLabel, r.m,
                     r.yLabel.empty() ? "y" : r.yLabel, r.n);
  out += fmt::format("statistic     {} = {:.6f}\n", isKs ? "D+" : "T",
                     r.statistic);
  if (r.zScore) out += fmt::format("z-score       {:.6f}\n", *r.zScore);
  if (r.thetas) {
    out += fmt::format(
        "thetas        {:.6f} {:.6f} {:.6f} (variance component {:.6f})\n",
        r.thetas->theta1, r.thetas->theta2, r.thetas->theta3,
        r.thetas->varianceComponent);
  }
  out += fmt::format("p-value       {}\n", pValueText(r.pValue));
  out += fmt::format("alpha         {} ({})\n", r.alpha,
                     r.rejected ? "reject" : "do not reject");
  if (r.seed) out += fmt::format("seed          {}\n", *r.seed);
  if (r.permutationCount) {
    out += fmt::format("permutations  {} (exceedances {})\n",
                       *r.permutationCount, r.exceedCount.value_or(0));
  }
  return out;
}

std::string descriptionToJson(const Description& d) {
  auto sample = [](const SampleSummary& s) {
    Json j;
    j["label"] = s.label;
    j["size"] = s.size;
    for (Feature f : kFeatures) {
      j[toString(f)] = {{"mean", number(s[f].mean)}, {"sd", number(s[f].sd)}};
    }
    return j;
  };
  Json j;
  j["x"] = sample(d.x);
  j["y"] = sample(d.y);
  Json welch;
  for (Feature f : kFeatures) {
    welch[toString(f)] = number(d.welchPValues[static_cast<std::size_t>(f)]);
  }
  j["welchPValue"] = welch;
  j["alternative"] = "mean of Y greater than mean of X";
  j["toolVersion"] = kToolVersion;
  return j.dump(2);
}

std::string descriptionToText(const Description& d) {
  auto meanSd = [](const MeanSd& v) {
    return fmt::format("{} ({})", cell(v.mean, 2), cell(v.sd, 2));
  };
  const std::string xName = d.x.label.empty() ? "X" : d.x.label;
  const std::string yName = d.y.label.empty() ? "Y" : d.y.label;
  std::string out;
  out += fmt::format("{:<12}{:>22}{:>22}{:>22}\n", "",
                     fmt::format("{} (m = {})", xName, d.x.size),
                     fmt::format("{} (n = {})", yName, d.y.size), "p-value");
  for (Feature f : kFeatures) {
    out += fmt::format("{:<12}{:>22}{:>22}{:>22}\n", toString(f),
                       meanSd(d.x[f]), meanSd(d.y[f]),
                       pValueText(d.welchPValues[static_cast<std::size_t>(f)]));
  }
  out += "p-value: one-sided Welch t-test, mean of Y greater than mean of X\n";
  return out;
}

std::string powerReportToJson(const PowerReport& r,
                              const PowerJsonOptions& options) {
  const Scenario& s = r.scenario;
  Json j;
  j["family"] = toString(s.family);
  j["m"] = s.m;
  j["n"] = s.n;
  j["delta"] = s.delta;
  j["rho"] = s.correlation;
  j["alpha"] = s.alpha;
  j["replicates"] = s.replicates;
  j["permutations"] = s.permutations;
  j["seed"] = r.seed;
  j["mahalanobis"] = mahalanobisEffect(s.delta, s.correlation);
  Json methods = Json::array();
  for (const MethodPower& mp : r.methods) {
    methods.push_back({{"method", toString(mp.method)},
                       {"rejections", mp.rejections},
                       {"rate", mp.rate},
                       {"standardError", mp.standardError}});
  }
  j["methods"] = methods;
  j["toolVersion"] = kToolVersion;
  if (options.includeTiming) {
    j["elapsedSeconds"] = r.elapsedSeconds;
    j["timestamp"] = isoTimestamp();
  }
  return j.dump();
}

PowerReport powerReportFromJson(std::string_view text) {
  return parsing(text, [](const Json& j) {
    PowerReport r;
    Scenario& s = r.scenario;
    const auto family = parseFamily(j.at("family").get<std::string>());
    if (!family) throw Error(ErrorKind::Parse, "unknown family in report");
    s.family = *family;
    s.m = j.at("m").get<std::size_t>();
    s.n = j.at("n").get<std::size_t>();
    s.delta = j.at("delta").get<double>();
    s.correlation = j.at("rho").get<double>();
    s.alpha = j.at("alpha").get<double>();
    s.replicates = j.at("replicates").get<std::uint64_t>();
    s.permutations = j.at("permutations").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    s.methods.clear();
    for (const Json& mj : j.at("methods")) {
      MethodPower mp{methodFrom(mj.at("method"))};
      mp.rejections = mj.at("rejections").get<std::uint64_t>();
      mp.rate = mj.at("rate").get<double>();
      mp.standardError = mj.at("standardError").get<double>();
      s.methods.push_back(mp.method);
      r.methods.push_back(mp);
    }
    if (j.contains("elapsedSeconds")) {
      r.elapsedSeconds = j.at("elapsedSeconds").get<double>();
    }
    return r;
  });
}

std::string powerTableToText(std::span<const PowerReport> reports) {
  std::vector<double> rhos;
  for (const auto& r : reports) rhos.push_back(r.scenario.correlation);
  std::sort(rhos.begin(), rhos.end());
  rhos.erase(std::unique(rhos.begin(), rhos.end()), rhos.end());

  // Row key keeps the first-seen order of (family, m, n, delta).
  using RowKey = std::tuple<Family, std::size_t, std::size_t, double>;
  std::vector<RowKey> rows;
  std::map<std::pair<RowKey, double>, const PowerReport*> cells;
  for (const auto& r : reports) {
    const Scenario& s = r.scenario;
    RowKey key{s.family, s.m, s.n, s.delta};
    if (std::find(rows.begin(), rows.end(), key) == rows.end()) {
      rows.push_back(key);
    }
    cells[{key, s.correlation}] = &r;
  }

  constexpr int kCol = 8;
  std::string out;
  out += fmt::format("{:<7}{:<11}{:<6}", "case", "(m, n)", "delta");
  for (double rho : rhos) {
    out += fmt::format("| {:<{}}", fmt::format("rho = {}", rho), 3 * kCol);
  }
  out += "\n";
  out += fmt::format("{:<24}", "");
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    out += fmt::format("| {:<{}}{:<{}}{:<{}}", "U-perm", kCol, "U-asym", kCol,
                       "B-KS", kCol);
  }
  out += "\n";
  for (const RowKey& key : rows) {
    const auto& [family, m, n, delta] = key;
    out += fmt::format("{:<7}{:<11}{:<6}",
                       family == Family::Normal ? "(N)" : "(T)",
                       fmt::format("({}, {})", m, n), fmt::format("{:.1f}", delta));
    for (double rho : rhos) {
      const auto it = cells.find({key, rho});
      out += "| ";
      for (Method method : kAllMethods) {
        const MethodPower* mp =
            it == cells.end() ? nullptr : it->second->find(method);
        out += fmt::format("{:<{}}", mp ? cell(mp->rate, 3) : "-", kCol);
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace intorder

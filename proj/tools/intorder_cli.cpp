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

// intorder: command-line front end over the libintorder C interface.
//
//   intorder test X.csv Y.csv [--method u-perm|u-asym|ks-perm] ...
//   intorder describe X.csv Y.csv [--format text|json]
//   intorder simulate [--family ...] [--paper-grid] [--cell "(m,n)"] ...
//
// The first file is the baseline sample X and the second the sample Y
// hypothesized to be stochastically greater. Exit codes: 0 computed, 2 usage,
// 3 I/O, 4 parse or validation, 5 degenerate statistic.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "intorder/intorder.h"

namespace {

constexpr int kExitUsage = INTORDER_ERROR_INVALID_ARGUMENT;

struct SampleDeleter {
  void operator()(intorder_sample* s) const { intorder_sample_destroy(s); }
};
struct ReportDeleter {
  void operator()(intorder_report* r) const { intorder_report_destroy(r); }
};
struct DescriptionDeleter {
  void operator()(intorder_description* d) const {
    intorder_description_destroy(d);
  }
};
struct TableDeleter {
  void operator()(intorder_power_table* t) const {
    intorder_power_table_destroy(t);
  }
};
struct StringDeleter {
  void operator()(char* s) const { intorder_string_free(s); }
};

using SamplePtr = std::unique_ptr<intorder_sample, SampleDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a status already reported on stderr.
struct Failure {
  int status;
};

void check(intorder_status status) {
  if (status != INTORDER_OK) {
    std::cerr << "intorder: error: " << intorder_last_error() << '\n';
    throw Failure{status};
  }
}

SamplePtr loadSample(const std::string& path) {
  intorder_sample* raw = nullptr;
  check(intorder_sample_read_csv(path.c_str(), path.c_str(), &raw));
  return SamplePtr(raw);
}

void emit(char* text) {
  StringPtr owned(text);
  std::string_view view(owned.get());
  std::cout << view;
  if (view.empty() || view.back() != '\n') std::cout << '\n';
}

const std::map<std::string, intorder_method> kMethodNames = {
    {"u-perm", INTORDER_METHOD_U_PERM},
    {"u-asym", INTORDER_METHOD_U_ASYM},
    {"ks-perm", INTORDER_METHOD_KS_PERM},
    {"b-ks", INTORDER_METHOD_KS_PERM}};

const std::map<std::string, intorder_family> kFamilyNames = {
    {"normal", INTORDER_FAMILY_NORMAL}, {"t5", INTORDER_FAMILY_T5}};

const std::map<std::string, intorder_format> kFormatNames = {
    {"text", INTORDER_FORMAT_TEXT}, {"json", INTORDER_FORMAT_JSON}};

// "(30,120)" or "30,120"
std::optional<std::pair<std::size_t, std::size_t>> parseCell(
    const std::string& text) {
  static const std::regex pattern(R"(^\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) return std::nullopt;
  try {
    return std::pair{static_cast<std::size_t>(std::stoull(match[1])),
                     static_cast<std::size_t>(std::stoull(match[2]))};
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

struct TestArgs {
  std::string xPath;
  std::string yPath;
  intorder_method method = INTORDER_METHOD_U_PERM;
  double alpha = 0.05;
  std::uint64_t permutations = 20000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  intorder_format format = INTORDER_FORMAT_TEXT;
};

int runTest(const TestArgs& args) {
  const SamplePtr x = loadSample(args.xPath);
  const SamplePtr y = loadSample(args.yPath);
  intorder_test_options options;
  intorder_test_options_init(&options);
  options.method = args.method;
  options.alpha = args.alpha;
  options.permutations = args.permutations;
  options.seed = args.seed;
  options.threads = args.threads;
  intorder_report* raw = nullptr;
  check(intorder_run_test(x.get(), y.get(), &options, &raw));
  const std::unique_ptr<intorder_report, ReportDeleter> report(raw);
  char* text = nullptr;
  check(intorder_report_render(report.get(), args.format, &text));
  emit(text);
  return 0;
}

struct DescribeArgs {
  std::string xPath;
  std::string yPath;
  intorder_format format = INTORDER_FORMAT_TEXT;
};

int runDescribe(const DescribeArgs& args) {
  const SamplePtr x = loadSample(args.xPath);
  const SamplePtr y = loadSample(args.yPath);
  intorder_description* raw = nullptr;
  check(intorder_describe(x.get(), y.get(), &raw));
  const std::unique_ptr<intorder_description, DescriptionDeleter> d(raw);
  char* text = nullptr;
  check(intorder_description_render(d.get(), args.format, &text));
  emit(text);
  return 0;
}

struct SimulateArgs {
  std::vector<std::string> families;
  std::size_t m = 30;
  std::size_t n = 30;
  double delta = 0.0;
  double rho = 0.0;
  std::uint64_t replicates = 2000;
  std::uint64_t permutations = 2000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::vector<std::string> methods;
  unsigned threads = 0;
  bool standardGrid = false;
  std::vector<std::string> cells;
  intorder_format format = INTORDER_FORMAT_TEXT;
  bool noTimestamp = false;
};

int usage(const std::string& message) {
  std::cerr << "intorder: error: " << message << '\n';
  return kExitUsage;
}

int runSimulate(const SimulateArgs& args) {
  intorder_scenario base;
  intorder_scenario_init(&base);
  base.m = args.m;
  base.n = args.n;
  base.delta = args.delta;
  base.rho = args.rho;
  base.alpha = args.alpha;
  base.replicates = args.replicates;
  base.permutations = args.permutations;
  if (!args.methods.empty()) {
    base.methods = 0;
    for (const auto& name : args.methods) {
      base.methods |= 1u << kMethodNames.at(name);
    }
  }

  unsigned familyMask = 0;
  for (const auto& name : args.families) {
    familyMask |= 1u << kFamilyNames.at(name);
  }

  std::vector<intorder_scenario> scenarios;
  if (args.standardGrid) {
    std::vector<std::size_t> ms;
    std::vector<std::size_t> ns;
    for (const auto& cell : args.cells) {
      const auto parsed = parseCell(cell);
      if (!parsed) return usage("invalid --cell value '" + cell + "'");
      ms.push_back(parsed->first);
      ns.push_back(parsed->second);
    }
    if (familyMask == 0) {
      familyMask = (1u << INTORDER_FAMILY_NORMAL) | (1u << INTORDER_FAMILY_T5);
    }
    std::size_t count = 0;
    check(intorder_power_grid(&base, familyMask, ms.data(), ns.data(),
                              ms.size(), nullptr, 0, &count));
    scenarios.resize(count);
    check(intorder_power_grid(&base, familyMask, ms.data(), ns.data(),
                              ms.size(), scenarios.data(), scenarios.size(),
                              &count));
  } else {
    if (!args.cells.empty()) return usage("--cell requires --paper-grid");
    if (args.families.size() > 1) {
      return usage("a single scenario takes one --family");
    }
    if (familyMask != 0) {
      base.family = args.families.front() == "t5" ? INTORDER_FAMILY_T5
                                                  : INTORDER_FAMILY_NORMAL;
    }
    scenarios.push_back(base);
  }

  if (args.replicates == 1) {
    std::cerr << "intorder: warning: one replicate leaves the Monte Carlo "
                 "standard error undefined; it is reported as 0\n";
  }

  intorder_power_table* raw = nullptr;
  check(intorder_power_table_create(&raw));
  const std::unique_ptr<intorder_power_table, TableDeleter> table(raw);
  for (const auto& scenario : scenarios) {
    check(intorder_power_table_run(table.get(), &scenario, args.seed,
                                   args.threads));
  }
  char* text = nullptr;
  check(intorder_power_table_render(table.get(), args.format,
                                    args.noTimestamp ? 0 : 1, &text));
  emit(text);
  return 0;
}

void addFormat(CLI::App* cmd, intorder_format& target) {
  cmd->add_option("--format", target, "Output format: text or json")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Stochastic-order tests for interval-valued samples. In every command "
      "the first CSV is the baseline sample X and the second is the sample "
      "Y hypothesized to be stochastically greater."};
  app.require_subcommand(1);
  app.set_version_flag("--version", intorder_version());

  TestArgs testArgs;
  auto* test = app.add_subcommand(
      "test", "Test H1: Y is stochastically greater than X (one-sided)");
  test->add_option("x", testArgs.xPath, "Baseline sample X (CSV)")
      ->required();
  test->add_option("y", testArgs.yPath, "Sample Y, hypothesized greater (CSV)")
      ->required();
  test->add_option("--method", testArgs.method, "u-perm, u-asym or ks-perm")
      ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  test->add_option("--alpha", testArgs.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  test->add_option("--permutations,-B", testArgs.permutations,
                   "Random permutations for the permutation methods")
      ->check(CLI::PositiveNumber);
  test->add_option("--seed", testArgs.seed, "Permutation seed");
  test->add_option("--threads", testArgs.threads,
                   "Worker cap, 0 = all cores; never changes results");
  addFormat(test, testArgs.format);

  DescribeArgs describeArgs;
  auto* describe = app.add_subcommand(
      "describe", "Mean and SD of center, bounds and half-range with "
                  "one-sided Welch p-values (Y mean greater)");
  describe->add_option("x", describeArgs.xPath, "Sample X (CSV)")->required();
  describe->add_option("y", describeArgs.yPath, "Sample Y (CSV)")->required();
  addFormat(describe, describeArgs.format);

  SimulateArgs simArgs;
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo size and power on the center/log-range model");
  simulate
      ->add_option("--family", simArgs.families,
                   "normal or t5; repeatable with --paper-grid")
      ->check(CLI::IsMember(kFamilyNames, CLI::ignore_case))
      ->transform(CLI::detail::to_lower);
  simulate->add_option("--m", simArgs.m, "Size of X")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--n", simArgs.n, "Size of Y")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--delta", simArgs.delta, "Center shift of Y");
  simulate->add_option("--rho", simArgs.rho,
                       "Center/log-range correlation, |rho| < 1");
  simulate->add_option("--replicates", simArgs.replicates, "Monte Carlo runs")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--permutations,-B", simArgs.permutations,
                       "Permutations per replicate")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--alpha", simArgs.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--seed", simArgs.seed, "Master seed");
  simulate
      ->add_option("--methods", simArgs.methods,
                   "Subset of u-perm, u-asym, ks-perm")
      ->delimiter(',')
      ->check(CLI::IsMember(kMethodNames, CLI::ignore_case))
      ->transform(CLI::detail::to_lower);
  simulate->add_option("--threads", simArgs.threads,
                       "Worker cap, 0 = all cores; never changes results");
  simulate->add_flag("--paper-grid", simArgs.standardGrid,
                     "Run the 4 x 4 x 3 grid of deltas, size pairs and rho");
  simulate->add_option("--cell", simArgs.cells,
                       "Restrict --paper-grid to size pair \"(m,n)\"");
  addFormat(simulate, simArgs.format);
  simulate->add_flag("--no-timestamp", simArgs.noTimestamp,
                     "Omit timing fields so output is byte-reproducible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*test) return runTest(testArgs);
    if (*describe) return runDescribe(describeArgs);
    if (*simulate) return runSimulate(simArgs);
  } catch (const Failure& f) {
    return f.status;
  } catch (const std::exception& e) {
    std::cerr << "intorder: error: " << e.what() << '\n';
    return INTORDER_ERROR_INTERNAL;
  }
  return kExitUsage;
}

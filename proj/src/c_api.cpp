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

#include "intorder/intorder.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <iterator>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "intorder/csv.hpp"
#include "intorder/describe.hpp"
#include "intorder/error.hpp"
#include "intorder/interval.hpp"
#include "intorder/ks_test.hpp"
#include "intorder/permutation.hpp"
#include "intorder/report.hpp"
#include "intorder/simulation.hpp"
#include "intorder/u_test.hpp"

struct intorder_sample {
  intorder::IntervalSample value;
};

struct intorder_report {
  intorder::TestReport value;
};

struct intorder_description {
  intorder::Description value;
};

struct intorder_power_table {
  std::vector<intorder::PowerReport> rows;
};

namespace {

thread_local std::string lastError;

intorder_status fail(intorder_status status, std::string message) {
  lastError = std::move(message);
  return status;
}

template <typename Body>
intorder_status guarded(Body&& body) noexcept {
  try {
    body();
    return INTORDER_OK;
  } catch (const intorder::Error& e) {
    return fail(static_cast<intorder_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(INTORDER_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(INTORDER_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(INTORDER_ERROR_INTERNAL, "unknown error");
  }
}

#define INTORDER_REQUIRE(cond, what)                                         \
  do {                                                                       \
    if (!(cond)) return fail(INTORDER_ERROR_INVALID_ARGUMENT, (what));       \
  } while (0)

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

intorder::StatisticKind toKind(intorder_statistic s) {
  switch (s) {
    case INTORDER_STATISTIC_U:
      return intorder::StatisticKind::UStatistic;
    case INTORDER_STATISTIC_KS:
      return intorder::StatisticKind::KsDPlus;
  }
  throw intorder::Error(intorder::ErrorKind::InvalidArgument,
                        "unknown statistic");
}

intorder::Method toMethod(intorder_method m) {
  switch (m) {
    case INTORDER_METHOD_U_PERM:
      return intorder::Method::UPerm;
    case INTORDER_METHOD_U_ASYM:
      return intorder::Method::UAsym;
    case INTORDER_METHOD_KS_PERM:
      return intorder::Method::BKs;
  }
  throw intorder::Error(intorder::ErrorKind::InvalidArgument,
                        "unknown method");
}

intorder::Family toFamily(intorder_family f) {
  switch (f) {
    case INTORDER_FAMILY_NORMAL:
      return intorder::Family::Normal;
    case INTORDER_FAMILY_T5:
      return intorder::Family::TDf5;
  }
  throw intorder::Error(intorder::ErrorKind::InvalidArgument,
                        "unknown family");
}

void fillThetas(const intorder::ThetaEstimates& t, intorder_thetas* out) {
  out->theta1 = t.theta1;
  out->theta2 = t.theta2;
  out->theta3 = t.theta3;
  out->variance_component = t.varianceComponent;
}

void fillPermutation(const intorder::PermutationOutcome& o,
                     intorder_permutation_result* out) {
  out->observed = o.observed;
  out->p_value = o.pValue;
  out->exceed_count = o.exceedCount;
  out->permutation_count = o.permutationCount;
}

bool validFormat(intorder_format f) {
  return f == INTORDER_FORMAT_TEXT || f == INTORDER_FORMAT_JSON;
}

}  // namespace

extern "C" {

const char* intorder_version(void) { return intorder::kToolVersion; }

const char* intorder_last_error(void) { return lastError.c_str(); }

void intorder_string_free(char* text) { std::free(text); }

intorder_status intorder_compare(double x_lower, double x_upper,
                                 double y_lower, double y_upper,
                                 intorder_relation* out) {
  INTORDER_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] {
    const intorder::Interval x(x_lower, x_upper);
    const intorder::Interval y(y_lower, y_upper);
    switch (intorder::compare(x, y)) {
      case intorder::OrderRelation::Less:
        *out = INTORDER_RELATION_LESS;
        break;
      case intorder::OrderRelation::Greater:
        *out = INTORDER_RELATION_GREATER;
        break;
      case intorder::OrderRelation::ContainsOther:
        *out = INTORDER_RELATION_CONTAINS;
        break;
      case intorder::OrderRelation::ContainedInOther:
        *out = INTORDER_RELATION_CONTAINED;
        break;
      case intorder::OrderRelation::TiedEndpoint:
        *out = INTORDER_RELATION_TIED;
        break;
    }
  });
}

intorder_status intorder_sample_create(const double* lower,
                                       const double* upper, size_t count,
                                       const char* label,
                                       intorder_sample** out) {
  INTORDER_REQUIRE(out != nullptr, "null output pointer");
  INTORDER_REQUIRE(count == 0 || (lower != nullptr && upper != nullptr),
                   "null bound array");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::pair<double, double>> raw(count);
    for (size_t i = 0; i < count; ++i) raw[i] = {lower[i], upper[i]};
    auto sample = intorder::makeSample(raw, label ? label : "");
    *out = new intorder_sample{std::move(sample)};
  });
}

intorder_status intorder_sample_read_csv(const char* path, const char* label,
                                         intorder_sample** out) {
  INTORDER_REQUIRE(out != nullptr, "null output pointer");
  INTORDER_REQUIRE(path != nullptr, "null path");
  *out = nullptr;
  return guarded([&] {
    auto sample = intorder::readIntervalCsv(path, label ? label : path);
    *out = new intorder_sample{std::move(sample)};
  });
}

void intorder_sample_destroy(intorder_sample* sample) { delete sample; }

size_t intorder_sample_size(const intorder_sample* sample) {
  return sample ? sample->value.size() : 0;
}

intorder_status intorder_sample_get(const intorder_sample* sample,
                                    size_t index, double* lower,
                                    double* upper) {
  INTORDER_REQUIRE(sample != nullptr, "null sample");
  INTORDER_REQUIRE(lower != nullptr && upper != nullptr,
                   "null output pointer");
  INTORDER_REQUIRE(index < sample->value.size(), "index out of range");
  *lower = sample->value[index].lower();
  *upper = sample->value[index].upper();
  return INTORDER_OK;
}

intorder_status intorder_t_statistic(const intorder_sample* x,
                                     const intorder_sample* y, double* out) {
  INTORDER_REQUIRE(x && y && out, "null argument");
  return guarded([&] { *out = intorder::tStatistic(x->value, y->value); });
}

intorder_status intorder_estimate_thetas(const intorder_sample* x,
                                         const intorder_sample* y,
                                         intorder_thetas* out) {
  INTORDER_REQUIRE(x && y && out, "null argument");
  return guarded(
      [&] { fillThetas(intorder::estimateThetas(x->value, y->value), out); });
}

intorder_status intorder_u_asymptotic(const intorder_sample* x,
                                      const intorder_sample* y,
                                      intorder_u_result* out) {
  INTORDER_REQUIRE(x && y && out, "null argument");
  return guarded([&] {
    const auto r = intorder::asymptoticTest(x->value, y->value);
    out->t = r.t;
    out->z_score = r.zScore;
    out->p_value = r.pValue;
    out->rho = r.rho;
    out->m = r.m;
    out->n = r.n;
    fillThetas(r.thetas, &out->thetas);
  });
}

intorder_status intorder_ks_statistic(const intorder_sample* x,
                                      const intorder_sample* y,
                                      intorder_ks_result* out) {
  INTORDER_REQUIRE(x && y && out, "null argument");
  return guarded([&] {
    const auto r = intorder::ksStatistic(x->value, y->value);
    out->d_plus = r.dPlus;
    out->sup_s = r.supS;
    out->sup_t = r.supT;
    out->m = r.m;
    out->n = r.n;
  });
}

intorder_status intorder_permutation_test(
    const intorder_sample* x, const intorder_sample* y,
    const intorder_permutation_plan* plan, intorder_permutation_result* out) {
  INTORDER_REQUIRE(x && y && plan && out, "null argument");
  return guarded([&] {
    intorder::PermutationPlan p;
    p.permutationCount = plan->permutations;
    p.seed = plan->seed;
    p.statistic = toKind(plan->statistic);
    p.threads = plan->threads;
    fillPermutation(intorder::permutationTest(x->value, y->value, p), out);
  });
}

intorder_status intorder_exhaustive_permutation_test(
    const intorder_sample* x, const intorder_sample* y,
    intorder_statistic statistic, intorder_permutation_result* out) {
  INTORDER_REQUIRE(x && y && out, "null argument");
  return guarded([&] {
    fillPermutation(intorder::exhaustivePermutationTest(x->value, y->value,
                                                        toKind(statistic)),
                    out);
  });
}

double intorder_normal_upper_tail(double z) {
  return intorder::normalUpperTail(z);
}

intorder_status intorder_mahalanobis_effect(double delta, double rho,
                                            double* out) {
  INTORDER_REQUIRE(out != nullptr, "null output pointer");
  return guarded([&] { *out = intorder::mahalanobisEffect(delta, rho); });
}

void intorder_test_options_init(intorder_test_options* options) {
  if (options == nullptr) return;
  const intorder::TestOptions d;
  options->method = INTORDER_METHOD_U_PERM;
  options->alpha = d.alpha;
  options->permutations = d.permutations;
  options->seed = d.seed;
  options->threads = d.threads;
}

intorder_status intorder_run_test(const intorder_sample* x,
                                  const intorder_sample* y,
                                  const intorder_test_options* options,
                                  intorder_report** out) {
  INTORDER_REQUIRE(x && y && options && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    intorder::TestOptions o;
    o.method = toMethod(options->method);
    o.alpha = options->alpha;
    o.permutations = options->permutations;
    o.seed = options->seed;
    o.threads = options->threads;
    auto report = intorder::runTest(x->value, y->value, o);
    *out = new intorder_report{std::move(report)};
  });
}

double intorder_report_statistic(const intorder_report* report) {
  return report ? report->value.statistic : 0.0;
}

double intorder_report_p_value(const intorder_report* report) {
  return report ? report->value.pValue : 1.0;
}

int intorder_report_rejected(const intorder_report* report) {
  return report && report->value.rejected ? 1 : 0;
}

intorder_status intorder_report_render(const intorder_report* report,
                                       intorder_format format, char** out) {
  INTORDER_REQUIRE(report && out, "null argument");
  INTORDER_REQUIRE(validFormat(format), "unknown format");
  *out = nullptr;
  return guarded([&] {
    *out = duplicate(format == INTORDER_FORMAT_JSON
                         ? intorder::testReportToJson(report->value)
                         : intorder::testReportToText(report->value));
  });
}

void intorder_report_destroy(intorder_report* report) { delete report; }

intorder_status intorder_describe(const intorder_sample* x,
                                  const intorder_sample* y,
                                  intorder_description** out) {
  INTORDER_REQUIRE(x && y && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto d = intorder::describeSamples(x->value, y->value);
    *out = new intorder_description{std::move(d)};
  });
}

intorder_status intorder_description_welch_p(
    const intorder_description* description, int feature, double* out) {
  INTORDER_REQUIRE(description && out, "null argument");
  INTORDER_REQUIRE(feature >= 0 && feature < 4, "feature out of range");
  *out = description->value.welchPValues[static_cast<size_t>(feature)];
  return INTORDER_OK;
}

intorder_status intorder_description_render(
    const intorder_description* description, intorder_format format,
    char** out) {
  INTORDER_REQUIRE(description && out, "null argument");
  INTORDER_REQUIRE(validFormat(format), "unknown format");
  *out = nullptr;
  return guarded([&] {
    *out = duplicate(format == INTORDER_FORMAT_JSON
                         ? intorder::descriptionToJson(description->value)
                         : intorder::descriptionToText(description->value));
  });
}

void intorder_description_destroy(intorder_description* description) {
  delete description;
}

void intorder_scenario_init(intorder_scenario* scenario) {
  if (scenario == nullptr) return;
  const intorder::Scenario d;
  scenario->family = INTORDER_FAMILY_NORMAL;
  scenario->m = d.m;
  scenario->n = d.n;
  scenario->delta = d.delta;
  scenario->rho = d.correlation;
  scenario->alpha = d.alpha;
  scenario->replicates = d.replicates;
  scenario->permutations = d.permutations;
  scenario->methods = (1u << INTORDER_METHOD_U_PERM) |
                      (1u << INTORDER_METHOD_U_ASYM) |
                      (1u << INTORDER_METHOD_KS_PERM);
}

intorder_status intorder_power_table_create(intorder_power_table** out) {
  INTORDER_REQUIRE(out != nullptr, "null output pointer");
  *out = nullptr;
  return guarded([&] { *out = new intorder_power_table{}; });
}

intorder_status intorder_power_table_run(intorder_power_table* table,
                                         const intorder_scenario* scenario,
                                         uint64_t seed, unsigned threads) {
  INTORDER_REQUIRE(table && scenario, "null argument");
  INTORDER_REQUIRE((scenario->methods & ~7u) == 0, "unknown method bit");
  return guarded([&] {
    intorder::Scenario s;
    s.family = toFamily(scenario->family);
    s.m = scenario->m;
    s.n = scenario->n;
    s.delta = scenario->delta;
    s.correlation = scenario->rho;
    s.alpha = scenario->alpha;
    s.replicates = scenario->replicates;
    s.permutations = scenario->permutations;
    s.methods.clear();
    for (int bit = 0; bit < 3; ++bit) {
      if (scenario->methods & (1u << bit)) {
        s.methods.push_back(toMethod(static_cast<intorder_method>(bit)));
      }
    }
    table->rows.push_back(intorder::runScenario(s, seed, threads));
  });
}

size_t intorder_power_table_size(const intorder_power_table* table) {
  return table ? table->rows.size() : 0;
}

intorder_status intorder_power_table_rate(const intorder_power_table* table,
                                          size_t row, intorder_method method,
                                          double* rate,
                                          double* standard_error) {
  INTORDER_REQUIRE(table && rate && standard_error, "null argument");
  INTORDER_REQUIRE(row < table->rows.size(), "row out of range");
  return guarded([&] {
    const auto* power = table->rows[row].find(toMethod(method));
    if (power == nullptr) {
      throw intorder::Error(intorder::ErrorKind::InvalidArgument,
                            "method was not run for this row");
    }
    *rate = power->rate;
    *standard_error = power->standardError;
  });
}

intorder_status intorder_power_table_render(const intorder_power_table* table,
                                            intorder_format format,
                                            int include_timing, char** out) {
  INTORDER_REQUIRE(table && out, "null argument");
  INTORDER_REQUIRE(validFormat(format), "unknown format");
  *out = nullptr;
  return guarded([&] {
    std::string text;
    if (format == INTORDER_FORMAT_JSON) {
      intorder::PowerJsonOptions options;
      options.includeTiming = include_timing != 0;
      for (const auto& r : table->rows) {
        text += intorder::powerReportToJson(r, options);
        text += '\n';
      }
    } else {
      text = intorder::powerTableToText(table->rows);
    }
    *out = duplicate(text);
  });
}

void intorder_power_table_destroy(intorder_power_table* table) {
  delete table;
}

intorder_status intorder_power_grid(const intorder_scenario* base,
                                    unsigned family_mask, const size_t* m,
                                    const size_t* n, size_t size_count,
                                    intorder_scenario* out, size_t capacity,
                                    size_t* cell_count) {
  INTORDER_REQUIRE(base && cell_count, "null argument");
  INTORDER_REQUIRE(size_count == 0 || (m && n), "null size array");
  INTORDER_REQUIRE(family_mask != 0 && (family_mask & ~3u) == 0,
                   "invalid family mask");
  return guarded([&] {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    if (size_count == 0) {
      sizes.assign(std::begin(intorder::PowerGrid::kSizes),
                   std::end(intorder::PowerGrid::kSizes));
    } else {
      for (size_t i = 0; i < size_count; ++i) sizes.emplace_back(m[i], n[i]);
    }
    std::vector<intorder_family> families;
    if (family_mask & (1u << INTORDER_FAMILY_NORMAL)) {
      families.push_back(INTORDER_FAMILY_NORMAL);
    }
    if (family_mask & (1u << INTORDER_FAMILY_T5)) {
      families.push_back(INTORDER_FAMILY_T5);
    }
    const size_t total = families.size() * sizes.size() *
                         std::size(intorder::PowerGrid::kDeltas) *
                         std::size(intorder::PowerGrid::kCorrelations);
    *cell_count = total;
    if (out == nullptr) return;
    if (capacity < total) {
      throw intorder::Error(intorder::ErrorKind::InvalidArgument,
                            "grid capacity too small");
    }
    size_t k = 0;
    for (const auto family : families) {
      for (const auto& [sm, sn] : sizes) {
        for (const double delta : intorder::PowerGrid::kDeltas) {
          for (const double rho : intorder::PowerGrid::kCorrelations) {
            intorder_scenario cell = *base;
            cell.family = family;
            cell.m = sm;
            cell.n = sn;
            cell.delta = delta;
            cell.rho = rho;
            out[k++] = cell;
          }
        }
      }
    }
  });
}

}  // extern "C"

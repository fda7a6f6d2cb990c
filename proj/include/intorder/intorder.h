/*
 * Copyright 2026 The intorder Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libintorder: stochastic-order tests for interval-valued
 * samples.
 *
 * Every fallible call returns an intorder_status. On failure a message is
 * available from intorder_last_error() on the calling thread until the next
 * failing call on that thread. Objects are opaque handles released with
 * their *_destroy function; strings returned through char** are released
 * with intorder_string_free. Handles are immutable after creation except
 * intorder_power_table, which must not be appended to concurrently.
 *
 * Orientation: x is the baseline sample, y the sample hypothesized to be
 * stochastically greater. All p-values are one-sided in that direction.
 */

#ifndef INTORDER_H
#define INTORDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INTORDER_API __declspec(dllexport)
#else
#define INTORDER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum intorder_status {
  INTORDER_OK = 0,
  INTORDER_ERROR_INTERNAL = 1,
  INTORDER_ERROR_INVALID_ARGUMENT = 2,
  INTORDER_ERROR_IO = 3,
  INTORDER_ERROR_PARSE = 4,
  INTORDER_ERROR_DEGENERATE = 5
} intorder_status;

typedef enum intorder_method {
  INTORDER_METHOD_U_PERM = 0,
  INTORDER_METHOD_U_ASYM = 1,
  INTORDER_METHOD_KS_PERM = 2
} intorder_method;

typedef enum intorder_statistic {
  INTORDER_STATISTIC_U = 0,
  INTORDER_STATISTIC_KS = 1
} intorder_statistic;

typedef enum intorder_family {
  INTORDER_FAMILY_NORMAL = 0,
  INTORDER_FAMILY_T5 = 1
} intorder_family;

typedef enum intorder_format {
  INTORDER_FORMAT_TEXT = 0,
  INTORDER_FORMAT_JSON = 1
} intorder_format;

typedef enum intorder_relation {
  INTORDER_RELATION_LESS = 0,
  INTORDER_RELATION_GREATER = 1,
  INTORDER_RELATION_CONTAINS = 2,
  INTORDER_RELATION_CONTAINED = 3,
  INTORDER_RELATION_TIED = 4
} intorder_relation;

typedef struct intorder_sample intorder_sample;
typedef struct intorder_report intorder_report;
typedef struct intorder_description intorder_description;
typedef struct intorder_power_table intorder_power_table;

INTORDER_API const char* intorder_version(void);
INTORDER_API const char* intorder_last_error(void);
INTORDER_API void intorder_string_free(char* text);

/* ---- intervals and samples ---- */

INTORDER_API intorder_status intorder_compare(double x_lower, double x_upper,
                                              double y_lower, double y_upper,
                                              intorder_relation* out);

/* Rejects the whole sample if any row is invalid (PARSE). */
INTORDER_API intorder_status intorder_sample_create(const double* lower,
                                                    const double* upper,
                                                    size_t count,
                                                    const char* label,
                                                    intorder_sample** out);
/* CSV with a "lower,upper" header; IO or PARSE on failure. */
INTORDER_API intorder_status intorder_sample_read_csv(const char* path,
                                                      const char* label,
                                                      intorder_sample** out);
INTORDER_API void intorder_sample_destroy(intorder_sample* sample);
INTORDER_API size_t intorder_sample_size(const intorder_sample* sample);
INTORDER_API intorder_status intorder_sample_get(const intorder_sample* sample,
                                                 size_t index, double* lower,
                                                 double* upper);

/* ---- statistics ---- */

typedef struct intorder_thetas {
  double theta1;
  double theta2;
  double theta3;
  double variance_component;
} intorder_thetas;

typedef struct intorder_u_result {
  double t;
  double z_score;
  double p_value;
  double rho;
  size_t m;
  size_t n;
  intorder_thetas thetas;
} intorder_u_result;

typedef struct intorder_ks_result {
  double d_plus;
  double sup_s;
  double sup_t;
  size_t m;
  size_t n;
} intorder_ks_result;

typedef struct intorder_permutation_plan {
  uint64_t permutations; /* >= 1 */
  uint64_t seed;
  intorder_statistic statistic;
  unsigned threads; /* 0 = all hardware threads; never changes results */
} intorder_permutation_plan;

typedef struct intorder_permutation_result {
  double observed;
  double p_value; /* (1 + exceed_count) / (1 + permutation_count) */
  uint64_t exceed_count;
  uint64_t permutation_count;
} intorder_permutation_result;

INTORDER_API intorder_status intorder_t_statistic(const intorder_sample* x,
                                                  const intorder_sample* y,
                                                  double* out);
/* Needs both samples of size >= 3 (DEGENERATE otherwise). */
INTORDER_API intorder_status intorder_estimate_thetas(const intorder_sample* x,
                                                      const intorder_sample* y,
                                                      intorder_thetas* out);
INTORDER_API intorder_status intorder_u_asymptotic(const intorder_sample* x,
                                                   const intorder_sample* y,
                                                   intorder_u_result* out);
INTORDER_API intorder_status intorder_ks_statistic(const intorder_sample* x,
                                                   const intorder_sample* y,
                                                   intorder_ks_result* out);
INTORDER_API intorder_status intorder_permutation_test(
    const intorder_sample* x, const intorder_sample* y,
    const intorder_permutation_plan* plan, intorder_permutation_result* out);
/* Full enumeration, p without smoothing; at most 1e6 assignments. */
INTORDER_API intorder_status intorder_exhaustive_permutation_test(
    const intorder_sample* x, const intorder_sample* y,
    intorder_statistic statistic, intorder_permutation_result* out);
INTORDER_API double intorder_normal_upper_tail(double z);
INTORDER_API intorder_status intorder_mahalanobis_effect(double delta,
                                                         double rho,
                                                         double* out);

/* ---- test reports ---- */

typedef struct intorder_test_options {
  intorder_method method;
  double alpha;
  uint64_t permutations;
  uint64_t seed;
  unsigned threads;
} intorder_test_options;

/* Sets defaults: u-perm, alpha 0.05, 20000 permutations, seed 0, 1 thread. */
INTORDER_API void intorder_test_options_init(intorder_test_options* options);
INTORDER_API intorder_status intorder_run_test(
    const intorder_sample* x, const intorder_sample* y,
    const intorder_test_options* options, intorder_report** out);
INTORDER_API double intorder_report_statistic(const intorder_report* report);
INTORDER_API double intorder_report_p_value(const intorder_report* report);
INTORDER_API int intorder_report_rejected(const intorder_report* report);
INTORDER_API intorder_status intorder_report_render(
    const intorder_report* report, intorder_format format, char** out);
INTORDER_API void intorder_report_destroy(intorder_report* report);

/* ---- descriptive statistics ---- */

INTORDER_API intorder_status intorder_describe(const intorder_sample* x,
                                               const intorder_sample* y,
                                               intorder_description** out);
/* feature: 0 center, 1 lower, 2 upper, 3 half-range. */
INTORDER_API intorder_status intorder_description_welch_p(
    const intorder_description* description, int feature, double* out);
INTORDER_API intorder_status intorder_description_render(
    const intorder_description* description, intorder_format format,
    char** out);
INTORDER_API void intorder_description_destroy(
    intorder_description* description);

/* ---- power simulation ---- */

typedef struct intorder_scenario {
  intorder_family family;
  size_t m;
  size_t n;
  double delta;
  double rho;
  double alpha;
  uint64_t replicates;
  uint64_t permutations;
  unsigned methods; /* bit (1 << intorder_method) per requested method */
} intorder_scenario;

/* Sets defaults: normal, (30, 30), delta 0, rho 0, alpha 0.05, 2000
 * replicates, 2000 permutations, all methods. */
INTORDER_API void intorder_scenario_init(intorder_scenario* scenario);
INTORDER_API intorder_status intorder_power_table_create(
    intorder_power_table** out);
/* Runs one scenario and appends its report. */
INTORDER_API intorder_status intorder_power_table_run(
    intorder_power_table* table, const intorder_scenario* scenario,
    uint64_t seed, unsigned threads);
INTORDER_API size_t intorder_power_table_size(const intorder_power_table* table);
/* INVALID_ARGUMENT when the row is out of range or the method was not run. */
INTORDER_API intorder_status intorder_power_table_rate(
    const intorder_power_table* table, size_t row, intorder_method method,
    double* rate, double* standard_error);
/* JSON: one object per line. include_timing = 0 gives byte-identical output
 * for identical inputs. */
INTORDER_API intorder_status intorder_power_table_render(
    const intorder_power_table* table, intorder_format format,
    int include_timing, char** out);
INTORDER_API void intorder_power_table_destroy(intorder_power_table* table);

/* Expands the power-study grid (families x size pairs x delta x rho) on top
 * of `base`, ordered by family, size, delta, rho. family_mask selects
 * families by bit (1 << intorder_family); size_count = 0 uses the four
 * standard size pairs (30,30), (30,120), (50,50), (50,200). With out = NULL
 * only *cell_count is set; otherwise capacity must hold every cell. */
INTORDER_API intorder_status intorder_power_grid(
    const intorder_scenario* base, unsigned family_mask, const size_t* m,
    const size_t* n, size_t size_count, intorder_scenario* out,
    size_t capacity, size_t* cell_count);

#ifdef __cplusplus
}
#endif

#endif /* INTORDER_H */

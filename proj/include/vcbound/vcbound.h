// Copyright 2026 The vcbound Authors
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

/*
 * C interface to vcbound: uniform-deviation bounds (classical VC/Hoeffding and
 * the Berry-Esseen refinement), growth functions of concrete set families,
 * exact supremum deviations and Monte Carlo estimates.
 *
 * Every function returns a vcb_status. On failure the out-parameters are left
 * untouched and vcb_last_error() describes the problem (per thread). Objects
 * returned through opaque handles are owned by the caller and released with
 * the matching *_free function; *_free accepts NULL.
 */

#ifndef VCBOUND_VCBOUND_H
#define VCBOUND_VCBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(VCBOUND_BUILDING_LIBRARY)
#define VCBOUND_API __attribute__((visibility("default")))
#else
#define VCBOUND_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vcb_status {
  VCB_OK = 0,
  VCB_ERROR_DOMAIN = 1,
  VCB_ERROR_SIZE = 2,
  VCB_ERROR_UNSUPPORTED = 3,
  VCB_ERROR_IO = 4,
  VCB_ERROR_NULL_ARGUMENT = 5,
  VCB_ERROR_INTERNAL = 6
} vcb_status;

VCBOUND_API const char* vcb_version(void);
VCBOUND_API const char* vcb_last_error(void);
VCBOUND_API const char* vcb_status_name(vcb_status status);

/* ---- standard normal ---------------------------------------------------- */

typedef struct vcb_tail {
  double value;
  double log_value;
} vcb_tail;

VCBOUND_API vcb_status vcb_std_normal_cdf(double x, double* out);
VCBOUND_API vcb_status vcb_std_normal_upper_tail(double x, vcb_tail* out);
VCBOUND_API vcb_status vcb_mills_upper_bound(double x, vcb_tail* out);

/* ---- bounds ------------------------------------------------------------- */

#define VCB_DEFAULT_BE_CONSTANT 0.4748

typedef enum vcb_variant {
  VCB_VARIANT_PAPER = 0,     /* C / sqrt(n) */
  VCB_VARIANT_TWO_SIDED = 1, /* 2 C / sqrt(n) */
  VCB_VARIANT_MOMENT = 2     /* 2 C beta3 / (sigma^3 sqrt(n)) */
} vcb_variant;

typedef struct vcb_bound_query {
  int64_t n;
  double epsilon;
  double log_growth; /* natural log of m_n(S); 0 for m = 1 */
  double be_constant;
  vcb_variant variant;
} vcb_bound_query;

typedef struct vcb_breakdown {
  double normal_tail_term;
  double be_term;
  double raw_total;
  double clamped_total;
  double log_normal_tail_term;
  double log_raw_total;
} vcb_breakdown;

VCBOUND_API vcb_status vcb_hoeffding_single(int64_t n, double epsilon, vcb_breakdown* out);
VCBOUND_API vcb_status vcb_hoeffding_vc(const vcb_bound_query* q, vcb_breakdown* out);
VCBOUND_API vcb_status vcb_refined_single(int64_t n, double p, double epsilon, vcb_variant variant,
                                          double be_constant, vcb_breakdown* out);
VCBOUND_API vcb_status vcb_refined_single_worst_case(int64_t n, double epsilon,
                                                     vcb_variant variant, double be_constant,
                                                     vcb_breakdown* out);
VCBOUND_API vcb_status vcb_refined_vc(const vcb_bound_query* q, vcb_breakdown* out);
VCBOUND_API vcb_status vcb_exact_binomial_tail(int64_t n, double p, double epsilon, double* out);

typedef struct vcb_window_endpoint {
  double epsilon;
  double diff_below; /* refined - classical just left of the endpoint */
  double diff_above; /* ... and just right of it */
  int at_domain_edge;
} vcb_window_endpoint;

typedef struct vcb_window {
  vcb_window_endpoint lower;
  vcb_window_endpoint upper;
} vcb_window;

typedef struct vcb_window_set vcb_window_set;

VCBOUND_API vcb_status vcb_crossover_window(int64_t n, double be_constant, vcb_variant variant,
                                            vcb_window_set** out);
VCBOUND_API size_t vcb_window_set_size(const vcb_window_set* set);
VCBOUND_API vcb_status vcb_window_set_get(const vcb_window_set* set, size_t index,
                                          vcb_window* out);
VCBOUND_API void vcb_window_set_free(vcb_window_set* set);

/* ---- set families and distributions ------------------------------------- */

typedef enum vcb_class_kind {
  VCB_CLASS_RAYS = 0,
  VCB_CLASS_INTERVALS = 1,
  VCB_CLASS_HALFSPACES = 2
} vcb_class_kind;

typedef struct vcb_class {
  vcb_class_kind kind;
  size_t dimension; /* 1 for rays and intervals */
} vcb_class;

typedef enum vcb_distribution_kind {
  VCB_DIST_UNIFORM01 = 0,
  VCB_DIST_STD_GAUSSIAN = 1
} vcb_distribution_kind;

typedef struct vcb_distribution {
  vcb_distribution_kind kind;
  size_t dimension;
} vcb_distribution;

typedef enum vcb_hypothesis_kind {
  VCB_HYP_RAY_AT_MOST = 0,  /* {x <= a} */
  VCB_HYP_RAY_AT_LEAST = 1, /* {x >= a} */
  VCB_HYP_INTERVAL = 2,     /* [a, b] */
  VCB_HYP_HALFSPACE = 3     /* {x : normal.x >= a} */
} vcb_hypothesis_kind;

/* lo_closed governs rays and half-spaces as well; open variants use strict
 * inequalities. normal/dimension are read only for half-spaces. */
typedef struct vcb_hypothesis {
  vcb_hypothesis_kind kind;
  double a;
  double b;
  int lo_closed;
  int hi_closed;
  const double* normal;
  size_t dimension;
} vcb_hypothesis;

VCBOUND_API vcb_status vcb_class_vc_dimension(vcb_class cls, size_t* out);
VCBOUND_API vcb_status vcb_contains(const vcb_hypothesis* h, const double* x, size_t dimension,
                                    int* out);
VCBOUND_API vcb_status vcb_true_probability(const vcb_hypothesis* h, vcb_distribution dist,
                                            double* out);

/* ---- samples ------------------------------------------------------------ */

typedef struct vcb_sample vcb_sample;

VCBOUND_API vcb_status vcb_sample_create(vcb_distribution dist, size_t n, uint64_t seed,
                                         vcb_sample** out);
/* Wraps caller-supplied points (row-major, n * dist.dimension doubles). */
VCBOUND_API vcb_status vcb_sample_from_points(vcb_distribution dist, const double* coords,
                                              size_t n, vcb_sample** out);
VCBOUND_API size_t vcb_sample_size(const vcb_sample* s);
VCBOUND_API size_t vcb_sample_dimension(const vcb_sample* s);
VCBOUND_API uint64_t vcb_sample_seed(const vcb_sample* s);
VCBOUND_API const double* vcb_sample_coords(const vcb_sample* s);
/* Writes "index,coord_0[,coord_1,...]" CSV; the JSON sidecar manifest is
 * skipped when manifest_path is NULL. */
VCBOUND_API vcb_status vcb_sample_write_csv(const vcb_sample* s, const char* csv_path,
                                            const char* manifest_path);
VCBOUND_API void vcb_sample_free(vcb_sample* s);

typedef struct vcb_sup_deviation {
  double value;
  double above; /* sup of d_n(A) - P(A) */
  double below; /* sup of P(A) - d_n(A) */
} vcb_sup_deviation;

VCBOUND_API vcb_status vcb_sup_deviation_exact(const vcb_sample* s, vcb_class cls,
                                               vcb_sup_deviation* out);

/* ---- growth functions --------------------------------------------------- */

typedef struct vcb_count {
  double value; /* +inf once beyond binary64 */
  double log_value;
} vcb_count;

typedef struct vcb_trace_report {
  size_t point_count;
  uint64_t distinct_traces;
  int shattered;
} vcb_trace_report;

VCBOUND_API vcb_status vcb_trace_count(const double* coords, size_t r, vcb_class cls,
                                       vcb_trace_report* out);
VCBOUND_API vcb_status vcb_growth_exact(vcb_class cls, uint64_t r, vcb_count* out);
VCBOUND_API vcb_status vcb_sauer_bound(uint64_t n, uint64_t d, vcb_count* binomial_sum,
                                       vcb_count* exponential_form);

typedef struct vcb_vc_certificate vcb_vc_certificate;

VCBOUND_API vcb_status vcb_vc_dimension_estimate(vcb_class cls, size_t r_max,
                                                 size_t random_configs, uint64_t seed,
                                                 vcb_vc_certificate** out);
VCBOUND_API size_t vcb_vc_certificate_dimension(const vcb_vc_certificate* c);
/* Row-major witness coordinates; *point_count receives the number of points. */
VCBOUND_API const double* vcb_vc_certificate_witness(const vcb_vc_certificate* c,
                                                     size_t* point_count);
VCBOUND_API void vcb_vc_certificate_free(vcb_vc_certificate* c);

/* ---- Monte Carlo -------------------------------------------------------- */

typedef struct vcb_mc_config {
  uint64_t trials;
  uint64_t base_seed;
  unsigned worker_count;
  double confidence_level; /* e.g. 0.999 */
} vcb_mc_config;

typedef struct vcb_mc_estimate {
  uint64_t successes;
  uint64_t trials;
  double p_hat;
  double ci_low;
  double ci_high;
  double confidence_level;
  uint64_t base_seed;
} vcb_mc_estimate;

typedef struct vcb_verdict {
  double bound;
  double ci_low;
  double margin;
  int violation;
} vcb_verdict;

VCBOUND_API vcb_status vcb_estimate_bn(vcb_class cls, vcb_distribution dist, size_t n,
                                       double epsilon, const vcb_mc_config* cfg,
                                       vcb_mc_estimate* out);
VCBOUND_API vcb_status vcb_estimate_single_tail(double p, int64_t n, double epsilon,
                                                const vcb_mc_config* cfg, vcb_mc_estimate* out);
/* out must hold `count` verdicts. */
VCBOUND_API vcb_status vcb_verify_bound(const vcb_mc_estimate* est, const vcb_breakdown* bounds,
                                        size_t count, vcb_verdict* out);
VCBOUND_API vcb_status vcb_wilson_interval(uint64_t successes, uint64_t trials, double level,
                                           double* low, double* high);

#ifdef __cplusplus
}
#endif

#endif /* VCBOUND_VCBOUND_H */

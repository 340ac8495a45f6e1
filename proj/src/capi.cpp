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

// extern "C" shim over the C++ core. Exceptions never cross this boundary:
// each entry point maps them to a vcb_status and records the message.

#include "vcbound/vcbound.h"

#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "vcbound/deviation_bounds.hpp"
#include "vcbound/errors.hpp"
#include "vcbound/growth_functions.hpp"
#include "vcbound/hypothesis_classes.hpp"
#include "vcbound/normal_approx.hpp"
#include "vcbound/simulation.hpp"

struct vcb_window_set {
  std::vector<vcbound::CrossoverWindow> windows;
};

struct vcb_sample {
  vcbound::EmpiricalSample sample;
};

struct vcb_vc_certificate {
  vcbound::VcCertificate cert;
};

namespace {

thread_local std::string g_last_error;

vcb_status status_of(vcbound::ErrorCode code) {
  switch (code) {
    case vcbound::ErrorCode::domain:
      return VCB_ERROR_DOMAIN;
    case vcbound::ErrorCode::size:
      return VCB_ERROR_SIZE;
    case vcbound::ErrorCode::unsupported:
      return VCB_ERROR_UNSUPPORTED;
    case vcbound::ErrorCode::io:
      return VCB_ERROR_IO;
  }
  return VCB_ERROR_INTERNAL;
}

template <class F>
vcb_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return VCB_OK;
  } catch (const vcbound::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return VCB_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VCB_ERROR_INTERNAL;
  }
}

vcb_status null_argument(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return VCB_ERROR_NULL_ARGUMENT;
}

#define VCB_REQUIRE(ptr) \
  if ((ptr) == nullptr) return null_argument(#ptr)

vcbound::BoundVariant to_variant(vcb_variant v) {
  switch (v) {
    case VCB_VARIANT_PAPER:
      return vcbound::BoundVariant::paper;
    case VCB_VARIANT_TWO_SIDED:
      return vcbound::BoundVariant::two_sided;
    case VCB_VARIANT_MOMENT:
      return vcbound::BoundVariant::moment;
  }
  throw vcbound::DomainError("unknown variant");
}

vcbound::HypothesisClass to_class(vcb_class c) {
  switch (c.kind) {
    case VCB_CLASS_RAYS:
      if (c.dimension != 1) throw vcbound::DomainError("rays are one-dimensional");
      return vcbound::HypothesisClass::rays();
    case VCB_CLASS_INTERVALS:
      if (c.dimension != 1) throw vcbound::DomainError("intervals are one-dimensional");
      return vcbound::HypothesisClass::intervals();
    case VCB_CLASS_HALFSPACES:
      return vcbound::HypothesisClass::halfspaces(c.dimension);
  }
  throw vcbound::DomainError("unknown class kind");
}

vcbound::Distribution to_distribution(vcb_distribution d) {
  switch (d.kind) {
    case VCB_DIST_UNIFORM01:
      if (d.dimension != 1) throw vcbound::DomainError("uniform01 is one-dimensional");
      return vcbound::Distribution::uniform01();
    case VCB_DIST_STD_GAUSSIAN:
      return vcbound::Distribution::std_gaussian(d.dimension);
  }
  throw vcbound::DomainError("unknown distribution kind");
}

vcbound::Hypothesis to_hypothesis(const vcb_hypothesis& h) {
  switch (h.kind) {
    case VCB_HYP_RAY_AT_MOST:
      return vcbound::Ray{vcbound::RayOrientation::at_most, h.a, h.lo_closed != 0};
    case VCB_HYP_RAY_AT_LEAST:
      return vcbound::Ray{vcbound::RayOrientation::at_least, h.a, h.lo_closed != 0};
    case VCB_HYP_INTERVAL:
      return vcbound::make_interval(h.a, h.b, h.lo_closed != 0, h.hi_closed != 0);
    case VCB_HYP_HALFSPACE:
      if (h.normal == nullptr) throw vcbound::DomainError("half-space normal is null");
      return vcbound::make_halfspace(std::vector<double>(h.normal, h.normal + h.dimension), h.a,
                                     h.lo_closed != 0);
  }
  throw vcbound::DomainError("unknown hypothesis kind");
}

vcb_breakdown to_c(const vcbound::BoundBreakdown& b) {
  return {b.normal_tail_term, b.be_term,   b.raw_total, b.clamped_total,
          b.log_normal_tail_term, b.log_raw_total};
}

vcbound::BoundBreakdown from_c(const vcb_breakdown& b) {
  return {b.normal_tail_term, b.be_term,   b.raw_total, b.clamped_total,
          b.log_normal_tail_term, b.log_raw_total};
}

vcbound::BoundQuery to_query(const vcb_bound_query& q) {
  vcbound::BoundQuery out;
  out.n = q.n;
  out.epsilon = q.epsilon;
  out.growth = vcbound::GrowthValue::from_log(q.log_growth);
  out.be_constant = q.be_constant;
  out.variant = to_variant(q.variant);
  return out;
}

vcbound::MCConfig to_config(const vcb_mc_config& c) {
  return {c.trials, c.base_seed, c.worker_count, c.confidence_level};
}

vcb_mc_estimate to_c(const vcbound::MCEstimate& e) {
  return {e.successes, e.trials, e.p_hat, e.ci_low, e.ci_high, e.confidence_level, e.base_seed};
}

vcb_count to_c(const vcbound::ExtendedCount& c) { return {c.value, c.log_value}; }

vcb_window_endpoint to_c(const vcbound::WindowEndpoint& e) {
  return {e.epsilon, e.diff_below, e.diff_above, e.at_domain_edge ? 1 : 0};
}

}  // namespace

extern "C" {

const char* vcb_version(void) { return VCBOUND_VERSION_STRING; }

const char* vcb_last_error(void) { return g_last_error.c_str(); }

const char* vcb_status_name(vcb_status status) {
  switch (status) {
    case VCB_OK:
      return "ok";
    case VCB_ERROR_DOMAIN:
      return "domain error";
    case VCB_ERROR_SIZE:
      return "size error";
    case VCB_ERROR_UNSUPPORTED:
      return "unsupported";
    case VCB_ERROR_IO:
      return "i/o error";
    case VCB_ERROR_NULL_ARGUMENT:
      return "null argument";
    case VCB_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

vcb_status vcb_std_normal_cdf(double x, double* out) {
  VCB_REQUIRE(out);
  return guarded([&] { *out = vcbound::std_normal_cdf(x); });
}

vcb_status vcb_std_normal_upper_tail(double x, vcb_tail* out) {
  VCB_REQUIRE(out);
  return guarded([&] {
    const auto t = vcbound::std_normal_upper_tail(x);
    *out = {t.value, t.log_value};
  });
}

vcb_status vcb_mills_upper_bound(double x, vcb_tail* out) {
  VCB_REQUIRE(out);
  return guarded([&] {
    const auto t = vcbound::mills_upper_bound(x);
    *out = {t.value, t.log_value};
  });
}

vcb_status vcb_hoeffding_single(int64_t n, double epsilon, vcb_breakdown* out) {
  VCB_REQUIRE(out);
  return guarded([&] { *out = to_c(vcbound::hoeffding_single(n, epsilon)); });
}

vcb_status vcb_hoeffding_vc(const vcb_bound_query* q, vcb_breakdown* out) {
  VCB_REQUIRE(q);
  VCB_REQUIRE(out);
  return guarded([&] { *out = to_c(vcbound::hoeffding_vc(to_query(*q))); });
}

vcb_status vcb_refined_single(int64_t n, double p, double epsilon, vcb_variant variant,
                              double be_constant, vcb_breakdown* out) {
  VCB_REQUIRE(out);
  return guarded([&] {
    *out = to_c(vcbound::refined_single({n, p, epsilon, to_variant(variant), be_constant}));
  });
}

vcb_status vcb_refined_single_worst_case(int64_t n, double epsilon, vcb_variant variant,
                                         double be_constant, vcb_breakdown* out) {
  VCB_REQUIRE(out);
  return guarded([&] {
    *out = to_c(vcbound::refined_single_worst_case(n, epsilon, to_variant(variant), be_constant));
  });
}

vcb_status vcb_refined_vc(const vcb_bound_query* q, vcb_breakdown* out) {
  VCB_REQUIRE(q);
  VCB_REQUIRE(out);
  return guarded([&] { *out = to_c(vcbound::refined_vc(to_query(*q))); });
}

vcb_status vcb_exact_binomial_tail(int64_t n, double p, double epsilon, double* out) {
  VCB_REQUIRE(out);
  return guarded([&] { *out = vcbound::exact_binomial_tail(n, p, epsilon); });
}

vcb_status vcb_crossover_window(int64_t n, double be_constant, vcb_variant variant,
                                vcb_window_set** out) {
  VCB_REQUIRE(out);
  return guarded([&] {
    auto windows = vcbound::crossover_window(n, be_constant, to_variant(variant));
    *out = new vcb_window_set{std::move(windows)};
  });
}

size_t vcb_window_set_size(const vcb_window_set* set) {
  return set == nullptr ? 0 : set->windows.size();
}

vcb_status vcb_window_set_get(const vcb_window_set* set, size_t index, vcb_window* out) {
  VCB_REQUIRE(set);
  VCB_REQUIRE(out);
  return guarded([&] {
    if (index >= set->windows.size()) throw vcbound::SizeError("window index out of range");
    const auto& w = set->windows[index];
    *out = {to_c(w.lower), to_c(w.upper)};
  });
}

void vcb_window_set_free(vcb_window_set* set) { delete set; }

vcb_status vcb_class_vc_dimension(vcb_class cls, size_t* out) {
  VCB_REQUIRE(out);
  return guarded([&] { *out = to_class(cls).vc_dimension(); });
}

vcb_status vcb_contains(const vcb_hypothesis* h, const double* x, size_t dimension, int* out) {
  VCB_REQUIRE(h);
  VCB_REQUIRE(x);
  VCB_REQUIRE(out);
  if (h->kind == VCB_HYP_HALFSPACE) VCB_REQUIRE(h->normal);
  return guarded([&] {
    *out = vcbound::contains(to_hypothesis(*h), std::span<const double>(x, dimension)) ? 1 : 0;
  });
}

vcb_status vcb_true_probability(const vcb_hypothesis* h, vcb_distribution dist, double* out) {
  VCB_REQUIRE(h);
  VCB_REQUIRE(out);
  if (h->kind == VCB_HYP_HALFSPACE) VCB_REQUIRE(h->normal);
  return guarded([&] { *out = vcbound::true_probability(to_hypothesis(*h), to_distribution(dist)); });
}

vcb_status vcb_sample_create(vcb_distribution dist, size_t n, uint64_t seed, vcb_sample** out) {
  VCB_REQUIRE(out);
  return guarded([&] { *out = new vcb_sample{vcbound::sample(to_distribution(dist), n, seed)}; });
}

vcb_status vcb_sample_from_points(vcb_distribution dist, const double* coords, size_t n,
                                  vcb_sample** out) {
  VCB_REQUIRE(coords);
  VCB_REQUIRE(out);
  return guarded([&] {
    const auto d = to_distribution(dist);
    if (n == 0) throw vcbound::DomainError("sample needs at least one point");
    vcbound::PointSet pts(d.dimension(), std::vector<double>(coords, coords + n * d.dimension()));
    *out = new vcb_sample{vcbound::EmpiricalSample{std::move(pts), d, 0}};
  });
}

size_t vcb_sample_size(const vcb_sample* s) { return s == nullptr ? 0 : s->sample.n(); }

size_t vcb_sample_dimension(const vcb_sample* s) {
  return s == nullptr ? 0 : s->sample.points.dimension();
}

uint64_t vcb_sample_seed(const vcb_sample* s) { return s == nullptr ? 0 : s->sample.seed; }

const double* vcb_sample_coords(const vcb_sample* s) {
  return s == nullptr ? nullptr : s->sample.points.coords().data();
}

vcb_status vcb_sample_write_csv(const vcb_sample* s, const char* csv_path,
                                const char* manifest_path) {
  VCB_REQUIRE(s);
  VCB_REQUIRE(csv_path);
  return guarded([&] {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw vcbound::IoError(std::string("cannot open ") + csv_path);
    vcbound::write_sample_csv(s->sample, csv);
    if (manifest_path != nullptr) {
      std::ofstream man(manifest_path, std::ios::binary);
      if (!man) throw vcbound::IoError(std::string("cannot open ") + manifest_path);
      vcbound::write_sample_manifest(s->sample, man);
    }
  });
}

void vcb_sample_free(vcb_sample* s) { delete s; }

vcb_status vcb_sup_deviation_exact(const vcb_sample* s, vcb_class cls, vcb_sup_deviation* out) {
  VCB_REQUIRE(s);
  VCB_REQUIRE(out);
  return guarded([&] {
    const auto d = vcbound::sup_deviation_exact(s->sample, to_class(cls));
    *out = {d.value, d.above, d.below};
  });
}

vcb_status vcb_trace_count(const double* coords, size_t r, vcb_class cls, vcb_trace_report* out) {
  VCB_REQUIRE(out);
  if (r > 0 && coords == nullptr) return null_argument("coords");
  return guarded([&] {
    const auto c = to_class(cls);
    std::vector<double> v;
    if (r > 0) v.assign(coords, coords + r * c.dimension());
    const auto rep = vcbound::trace_count(vcbound::PointSet(c.dimension(), std::move(v)), c);
    *out = {rep.point_count, rep.distinct_traces, rep.shattered ? 1 : 0};
  });
}

vcb_status vcb_growth_exact(vcb_class cls, uint64_t r, vcb_count* out) {
  VCB_REQUIRE(out);
  return guarded([&] { *out = to_c(vcbound::growth_exact(to_class(cls), r)); });
}

vcb_status vcb_sauer_bound(uint64_t n, uint64_t d, vcb_count* binomial_sum,
                           vcb_count* exponential_form) {
  VCB_REQUIRE(binomial_sum);
  VCB_REQUIRE(exponential_form);
  return guarded([&] {
    const auto s = vcbound::sauer_bound(n, d);
    *binomial_sum = to_c(s.binomial_sum);
    *exponential_form = to_c(s.exponential_form);
  });
}

vcb_status vcb_vc_dimension_estimate(vcb_class cls, size_t r_max, size_t random_configs,
                                     uint64_t seed, vcb_vc_certificate** out) {
  VCB_REQUIRE(out);
  return guarded([&] {
    auto cert = vcbound::vc_dimension_estimate(to_class(cls), r_max, random_configs, seed);
    *out = new vcb_vc_certificate{std::move(cert)};
  });
}

size_t vcb_vc_certificate_dimension(const vcb_vc_certificate* c) {
  return c == nullptr ? 0 : c->cert.dimension;
}

const double* vcb_vc_certificate_witness(const vcb_vc_certificate* c, size_t* point_count) {
  if (c == nullptr) {
    if (point_count != nullptr) *point_count = 0;
    return nullptr;
  }
  if (point_count != nullptr) *point_count = c->cert.witness.size();
  return c->cert.witness.coords().data();
}

void vcb_vc_certificate_free(vcb_vc_certificate* c) { delete c; }

vcb_status vcb_estimate_bn(vcb_class cls, vcb_distribution dist, size_t n, double epsilon,
                           const vcb_mc_config* cfg, vcb_mc_estimate* out) {
  VCB_REQUIRE(cfg);
  VCB_REQUIRE(out);
  return guarded([&] {
    *out = to_c(vcbound::estimate_bn(to_class(cls), to_distribution(dist), n, epsilon,
                                     to_config(*cfg)));
  });
}

vcb_status vcb_estimate_single_tail(double p, int64_t n, double epsilon, const vcb_mc_config* cfg,
                                    vcb_mc_estimate* out) {
  VCB_REQUIRE(cfg);
  VCB_REQUIRE(out);
  return guarded([&] { *out = to_c(vcbound::estimate_single_tail(p, n, epsilon, to_config(*cfg))); });
}

vcb_status vcb_verify_bound(const vcb_mc_estimate* est, const vcb_breakdown* bounds, size_t count,
                            vcb_verdict* out) {
  VCB_REQUIRE(est);
  if (count > 0 && (bounds == nullptr || out == nullptr)) return null_argument("bounds/out");
  return guarded([&] {
    vcbound::MCEstimate e{est->successes, est->trials,           est->p_hat,    est->ci_low,
                          est->ci_high,   est->confidence_level, est->base_seed};
    std::vector<vcbound::LabeledBound> labeled;
    labeled.reserve(count);
    for (size_t i = 0; i < count; ++i) labeled.push_back({std::to_string(i), from_c(bounds[i])});
    const auto verdicts = vcbound::verify_bound(e, labeled);
    for (size_t i = 0; i < count; ++i) {
      out[i] = {verdicts[i].bound, verdicts[i].ci_low, verdicts[i].margin,
                verdicts[i].violation ? 1 : 0};
    }
  });
}

vcb_status vcb_wilson_interval(uint64_t successes, uint64_t trials, double level, double* low,
                               double* high) {
  VCB_REQUIRE(low);
  VCB_REQUIRE(high);
  return guarded([&] {
    const auto ci = vcbound::wilson_interval(successes, trials, level);
    *low = ci.low;
    *high = ci.high;
  });
}

}  // extern "C"

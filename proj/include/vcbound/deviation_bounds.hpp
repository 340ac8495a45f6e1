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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vcbound {

// Berry-Esseen constant for i.i.d. summands (Shevtsova).
inline constexpr double kDefaultBerryEsseenConstant = 0.4748;

// How the Berry-Esseen error enters a single-set bound:
//   paper     C / sqrt(n)
//   two_sided 2 C / sqrt(n)                    (one error per tail)
//   moment    2 C beta3 / (sigma^3 sqrt(n))    (Lyapunov ratio of Bernoulli(p))
enum class BoundVariant { paper, two_sided, moment };

std::string to_string(BoundVariant v);
BoundVariant parse_variant(std::string_view name);

// The growth value m_n(S), carried as its logarithm so Sauer-type values far
// beyond binary64 still compose.
class GrowthValue {
 public:
  GrowthValue() = default;
  static GrowthValue from_count(double m);
  static GrowthValue from_log(double log_m);

  double log_value() const { return log_value_; }
  double value() const;

 private:
  explicit GrowthValue(double log_m) : log_value_(log_m) {}
  double log_value_ = 0.0;
};

struct BoundQuery {
  std::int64_t n = 1;
  double epsilon = 0.1;
  GrowthValue growth;
  double be_constant = kDefaultBerryEsseenConstant;
  BoundVariant variant = BoundVariant::paper;
};

struct SingleSetQuery {
  std::int64_t n = 1;
  double p = 0.5;
  double epsilon = 0.1;
  BoundVariant variant = BoundVariant::paper;
  double be_constant = kDefaultBerryEsseenConstant;
};

// Per-term decomposition of a bound. For the Hoeffding bounds the exponential
// term sits in normal_tail_term and be_term is zero.
struct BoundBreakdown {
  double normal_tail_term = 0.0;
  double be_term = 0.0;
  double raw_total = 0.0;
  double clamped_total = 0.0;  // min(raw_total, 1)
  double log_normal_tail_term = 0.0;
  double log_raw_total = 0.0;
};

// 2 exp(-2 n eps^2).
BoundBreakdown hoeffding_single(std::int64_t n, double epsilon);

// 2 m exp(-2 n eps^2).
BoundBreakdown hoeffding_vc(const BoundQuery& q);

// Single-set bound with the true sigma^2 = p(1-p):
// 2 (1 - Phi(eps sqrt(n) / sigma)) plus the variant's Berry-Esseen term.
// p in {0, 1} gives the zero breakdown: the deviation event is empty.
BoundBreakdown refined_single(const SingleSetQuery& q);

// Sigma-free single-set bound obtained from sigma <= 1/2 and the Mill's ratio:
// exp(-2 n eps^2) / (eps sqrt(2 pi n)) plus C/sqrt(n) (paper) or 2C/sqrt(n)
// (two_sided and moment, whose Lyapunov ratio is 1 at p = 1/2).
BoundBreakdown refined_single_worst_case(std::int64_t n, double epsilon, BoundVariant variant,
                                         double be_constant = kDefaultBerryEsseenConstant);

// m times the sigma-free single-set bound.
BoundBreakdown refined_vc(const BoundQuery& q);

// E|xi - p|^3 for xi ~ Bernoulli(p).
double bernoulli_third_abs_moment(double p);

// P(|X/n - p| > eps) for X ~ Binomial(n, p), summed exactly over the
// qualifying k with saddle-point (Loader) log-pmf terms and compensated
// summation.
double exact_binomial_tail(std::int64_t n, double p, double epsilon);

// Strict exceedance `deviation > epsilon`, except that values equal up to
// floating-point rounding (relative 1e-12) count as ties and do not exceed.
// Shared by the exact tail and the simulations so both use one convention.
bool exceeds(double deviation, double epsilon);

// One endpoint of a crossover window, bracketed to within 1e-9. diff_below and
// diff_above are refined - classical just left and right of the endpoint.
struct WindowEndpoint {
  double epsilon = 0.0;
  double diff_below = 0.0;
  double diff_above = 0.0;
  bool at_domain_edge = false;  // window runs into the edge of the search grid
};

struct CrossoverWindow {
  WindowEndpoint lower;
  WindowEndpoint upper;
};

inline constexpr std::size_t kCrossoverGridPoints = 1024;
inline constexpr double kCrossoverTolerance = 1e-9;
inline constexpr double kCrossoverGridLow = 1e-6;
inline constexpr double kCrossoverGridHigh = 1.0 - 1e-6;

// Raw refined_vc minus raw hoeffding_vc at m = 1 (m cancels in the sign).
double crossover_difference(std::int64_t n, double epsilon, double be_constant,
                            BoundVariant variant);

// Maximal eps-intervals inside (0, 1) where the refined family bound is
// strictly below the classical one. Bracketed on a log-spaced grid, then
// bisected; points of exact equality count as "not smaller".
std::vector<CrossoverWindow> crossover_window(std::int64_t n,
                                              double be_constant = kDefaultBerryEsseenConstant,
                                              BoundVariant variant = BoundVariant::paper);

}  // namespace vcbound

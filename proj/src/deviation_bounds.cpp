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

#include "vcbound/deviation_bounds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "vcbound/errors.hpp"
#include "vcbound/normal_approx.hpp"

namespace vcbound {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLog2Pi = 1.83787706640934548356;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTieTolerance = 1e-12;

void validate(std::int64_t n, double epsilon) {
  if (n < 1) throw DomainError("sample size n must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
}

void validate_constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("Berry-Esseen constant must be positive");
}

BoundBreakdown from_logs(double log_normal, double log_be) {
  BoundBreakdown b;
  b.log_normal_tail_term = log_normal;
  b.normal_tail_term = std::exp(log_normal);
  b.be_term = std::exp(log_be);
  b.log_raw_total = log_add_exp(log_normal, log_be);
  b.raw_total = b.normal_tail_term + b.be_term;
  b.clamped_total = std::min(b.raw_total, 1.0);
  return b;
}

BoundBreakdown zero_breakdown() { return from_logs(kNegInf, kNegInf); }

// log of the Berry-Esseen term for the sigma-free (sigma = 1/2) bound.
double worst_case_log_be(std::int64_t n, BoundVariant variant, double c) {
  const double base = std::log(c) - 0.5 * std::log(static_cast<double>(n));
  return variant == BoundVariant::paper ? base : kLn2 + base;
}

// Loader's saddle-point binomial pmf: stirlerr(n) = log(n!) - log(sqrt(2 pi n) (n/e)^n).
double stirlerr(std::int64_t n) {
  static constexpr std::array<double, 16> kSmall = {
      0.0,
      0.08106146679532725821967,
      0.04134069595540929409382,
      0.02767792568499833914879,
      0.02079067210376509311152,
      0.01664469118982119216319,
      0.01387612882307074799875,
      0.01189670994589177009506,
      0.01041126526197209649748,
      0.009255462182712732917729,
      0.008330563433362871256469,
      0.007573675487951840794972,
      0.006942840107209529865664,
      0.00640899418800420706844,
      0.005951370112758847735624,
      0.005554733551962801371039,
  };
  constexpr double S0 = 1.0 / 12.0;
  constexpr double S1 = 1.0 / 360.0;
  constexpr double S2 = 1.0 / 1260.0;
  constexpr double S3 = 1.0 / 1680.0;
  constexpr double S4 = 1.0 / 1188.0;
  if (n < 16) return kSmall[static_cast<std::size_t>(n)];
  const double nd = static_cast<double>(n);
  const double nn = nd * nd;
  if (n > 500) return (S0 - S1 / nn) / nd;
  if (n > 80) return (S0 - (S1 - S2 / nn) / nn) / nd;
  if (n > 35) return (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / nd;
  return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / nd;
}

// Deviance term x log(x / np) + np - x, by series when x is close to np.
double bd0(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

double log_binomial_pmf(std::int64_t k, std::int64_t n, double p) {
  const double q = 1.0 - p;
  const double nd = static_cast<double>(n);
  if (k == 0) return nd * std::log1p(-p);
  if (k == n) return nd * std::log(p);
  const double kd = static_cast<double>(k);
  const double lc = stirlerr(n) - stirlerr(k) - stirlerr(n - k) - bd0(kd, nd * p) -
                    bd0(nd - kd, nd * q);
  const double lf = kLog2Pi + std::log(kd) + std::log1p(-kd / nd);
  return lc - 0.5 * lf;
}

}  // namespace

std::string to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::paper:
      return "paper";
    case BoundVariant::two_sided:
      return "two_sided";
    case BoundVariant::moment:
      return "moment";
  }
  return "unknown";
}

BoundVariant parse_variant(std::string_view name) {
  if (name == "paper") return BoundVariant::paper;
  if (name == "two_sided" || name == "two-sided") return BoundVariant::two_sided;
  if (name == "moment") return BoundVariant::moment;
  throw DomainError("unknown bound variant '" + std::string(name) + "'");
}

GrowthValue GrowthValue::from_count(double m) {
  if (!(m >= 1.0)) throw DomainError("growth value must be >= 1");
  return GrowthValue(std::log(m));
}

GrowthValue GrowthValue::from_log(double log_m) {
  if (!(log_m >= 0.0) || std::isnan(log_m)) throw DomainError("growth value must be >= 1");
  return GrowthValue(log_m);
}

double GrowthValue::value() const { return std::exp(log_value_); }

BoundBreakdown hoeffding_single(std::int64_t n, double epsilon) {
  validate(n, epsilon);
  return from_logs(kLn2 - 2.0 * static_cast<double>(n) * epsilon * epsilon, kNegInf);
}

BoundBreakdown hoeffding_vc(const BoundQuery& q) {
  validate(q.n, q.epsilon);
  validate_constant(q.be_constant);
  const double log_single = kLn2 - 2.0 * static_cast<double>(q.n) * q.epsilon * q.epsilon;
  return from_logs(q.growth.log_value() + log_single, kNegInf);
}

double bernoulli_third_abs_moment(double p) {
  const double q = 1.0 - p;
  return p * q * (p * p + q * q);
}

BoundBreakdown refined_single(const SingleSetQuery& q) {
  validate(q.n, q.epsilon);
  validate_constant(q.be_constant);
  if (!(q.p >= 0.0 && q.p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (q.p == 0.0 || q.p == 1.0) return zero_breakdown();

  const double nd = static_cast<double>(q.n);
  const double sigma = std::sqrt(q.p * (1.0 - q.p));
  const double t = q.epsilon * std::sqrt(nd) / sigma;
  const double log_normal = kLn2 + std_normal_upper_tail(t).log_value;
  const double log_base = std::log(q.be_constant) - 0.5 * std::log(nd);
  double log_be = log_base;
  switch (q.variant) {
    case BoundVariant::paper:
      break;
    case BoundVariant::two_sided:
      log_be = kLn2 + log_base;
      break;
    case BoundVariant::moment:
      log_be = kLn2 + log_base + std::log(bernoulli_third_abs_moment(q.p)) - 3.0 * std::log(sigma);
      break;
  }
  return from_logs(log_normal, log_be);
}

BoundBreakdown refined_single_worst_case(std::int64_t n, double epsilon, BoundVariant variant,
                                         double be_constant) {
  validate(n, epsilon);
  validate_constant(be_constant);
  const double nd = static_cast<double>(n);
  const double log_normal =
      -2.0 * nd * epsilon * epsilon - std::log(epsilon) - 0.5 * (kLog2Pi + std::log(nd));
  return from_logs(log_normal, worst_case_log_be(n, variant, be_constant));
}

BoundBreakdown refined_vc(const BoundQuery& q) {
  const auto single = refined_single_worst_case(q.n, q.epsilon, q.variant, q.be_constant);
  const double log_m = q.growth.log_value();
  return from_logs(single.log_normal_tail_term + log_m,
                   worst_case_log_be(q.n, q.variant, q.be_constant) + log_m);
}

bool exceeds(double deviation, double epsilon) {
  return deviation > epsilon + kTieTolerance * std::max(1.0, std::abs(epsilon));
}

double exact_binomial_tail(std::int64_t n, double p, double epsilon) {
  validate(n, epsilon);
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;

  const double nd = static_cast<double>(n);
  // Neumaier-compensated sum of the qualifying pmf terms
  double sum = 0.0;
  double comp = 0.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double deviation = std::abs(static_cast<double>(k) - nd * p) / nd;
    if (!exceeds(deviation, epsilon)) continue;
    const double term = std::exp(log_binomial_pmf(k, n, p));
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return std::min(1.0, sum + comp);
}

double crossover_difference(std::int64_t n, double epsilon, double be_constant,
                            BoundVariant variant) {
  return refined_single_worst_case(n, epsilon, variant, be_constant).raw_total -
         hoeffding_single(n, epsilon).raw_total;
}

std::vector<CrossoverWindow> crossover_window(std::int64_t n, double be_constant,
                                              BoundVariant variant) {
  if (n < 1) throw DomainError("sample size n must be >= 1");
  validate_constant(be_constant);

  auto diff = [&](double e) { return crossover_difference(n, e, be_constant, variant); };
  auto inside = [&](double e) { return diff(e) < 0.0; };

  // Bisect a bracket whose ends differ in `inside` down to the tolerance.
  auto locate = [&](double a, double b) {
    const bool inside_a = inside(a);
    while (b - a > kCrossoverTolerance) {
      const double mid = 0.5 * (a + b);
      if (inside(mid) == inside_a) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return WindowEndpoint{0.5 * (a + b), diff(a), diff(b), false};
  };

  const double log_lo = std::log(kCrossoverGridLow);
  const double log_hi = std::log(kCrossoverGridHigh);
  std::vector<double> grid(kCrossoverGridPoints);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(grid.size() - 1);
    grid[i] = std::exp(log_lo + frac * (log_hi - log_lo));
  }
  grid.front() = kCrossoverGridLow;
  grid.back() = kCrossoverGridHigh;

  std::vector<CrossoverWindow> windows;
  bool open = false;
  CrossoverWindow current;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool in = inside(grid[i]);
    if (in && !open) {
      open = true;
      if (i == 0) {
        const double d = diff(grid[0]);
        current.lower = WindowEndpoint{grid[0], d, d, true};
      } else {
        current.lower = locate(grid[i - 1], grid[i]);
      }
    } else if (!in && open) {
      open = false;
      current.upper = locate(grid[i - 1], grid[i]);
      windows.push_back(current);
    }
  }
  if (open) {
    const double d = diff(grid.back());
    current.upper = WindowEndpoint{grid.back(), d, d, true};
    windows.push_back(current);
  }
  return windows;
}

}  // namespace vcbound

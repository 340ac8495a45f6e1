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

#include "vcbound/normal_approx.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vcbound/errors.hpp"

namespace vcbound {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// Beyond this point erfc is still representable but we switch to the
// continued fraction so log_value never goes through a subnormal.
constexpr double kFarTailStart = 26.0;

void require_finite(double x, const char* op) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(op) + ": argument must be finite");
  }
}

// Mill's ratio R(x) = (1 - Phi(x)) / phi(x) by the Laplace continued fraction
// R(x) = 1/(x + 1/(x + 2/(x + 3/(x + ...)))), evaluated with modified Lentz.
// Converges in a handful of terms for x >= kFarTailStart.
double mills_ratio_continued_fraction(double x) {
  constexpr double kTiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    d = x + k * d;
    if (d == 0.0) d = kTiny;
    c = x + k / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

}  // namespace

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

double std_normal_cdf(double x) {
  require_finite(x, "std_normal_cdf");
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

TailValue std_normal_upper_tail(double x) {
  require_finite(x, "std_normal_upper_tail");
  TailValue t;
  if (x >= kFarTailStart) {
    t.log_value = -0.5 * x * x - kLogSqrt2Pi + std::log(mills_ratio_continued_fraction(x));
    t.value = std::exp(t.log_value);
    return t;
  }
  t.value = 0.5 * std::erfc(x * kInvSqrt2);
  if (x < -1.0) {
    // value is close to 1; log1p of the small lower tail keeps log_value exact
    t.log_value = std::log1p(-0.5 * std::erfc(-x * kInvSqrt2));
  } else {
    t.log_value = std::log(t.value);
  }
  return t;
}

TailValue mills_upper_bound(double x) {
  require_finite(x, "mills_upper_bound");
  if (!(x > 0.0)) {
    throw DomainError("mills_upper_bound: requires x > 0");
  }
  TailValue t;
  t.log_value = -0.5 * x * x - std::log(x) - kLogSqrt2Pi;
  t.value = std::exp(t.log_value);
  return t;
}

}  // namespace vcbound

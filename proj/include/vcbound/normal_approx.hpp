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

// Standard normal distribution function and its upper tail.
//
// Accuracy: std_normal_cdf is within 1e-12 absolute of the true value on the
// whole real line. std_normal_upper_tail is within 1e-10 relative for
// x in [-10, 40]; once 1 - Phi(x) drops below the binary64 range the value
// flushes to a subnormal or zero, but log_value stays finite and accurate.

namespace vcbound {

// A probability together with its natural logarithm.
struct TailValue {
  double value = 0.0;
  double log_value = 0.0;
};

double std_normal_cdf(double x);

TailValue std_normal_upper_tail(double x);

/// Mill's-ratio upper bound exp(-x^2/2) / (x sqrt(2 pi)) on 1 - Phi(x), x > 0.
TailValue mills_upper_bound(double x);

/// log(exp(a) + exp(b)) without overflow; handles -inf operands.
double log_add_exp(double a, double b);

}  // namespace vcbound

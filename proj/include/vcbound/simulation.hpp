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
#include <span>
#include <string>
#include <vector>

#include "vcbound/deviation_bounds.hpp"
#include "vcbound/hypothesis_classes.hpp"

namespace vcbound {

struct MCConfig {
  std::uint64_t trials = 10'000;
  std::uint64_t base_seed = 0;
  unsigned worker_count = 1;
  double confidence_level = 0.999;
};

struct MCEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double confidence_level = 0.999;
  std::uint64_t base_seed = 0;
};

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

// Wilson score interval for `successes` out of `trials` at the given two-sided
// confidence level, clamped so that low <= successes/trials <= high.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double level);

// Monte Carlo estimate of P(sup_A |d_n(A) - P(A)| > eps). Trial i draws its
// sample with seed derive_seed(base_seed, i); trials are split into
// contiguous blocks across workers and the success counts summed, so the
// result does not depend on worker_count.
MCEstimate estimate_bn(const HypothesisClass& cls, const Distribution& dist, std::size_t n,
                       double epsilon, const MCConfig& cfg);

// Monte Carlo estimate of P(|S/n - p| > eps), S a Bernoulli(p) sum of n
// terms; same seeding contract (trial i compares n uniforms from stream
// derive_seed(base_seed, i) against p).
MCEstimate estimate_single_tail(double p, std::int64_t n, double epsilon, const MCConfig& cfg);

struct LabeledBound {
  std::string label;
  BoundBreakdown bound;
};

struct BoundVerdict {
  std::string label;
  double bound = 0.0;   // clamped total
  double ci_low = 0.0;
  double margin = 0.0;  // |bound - ci_low|
  bool violation = false;
};

// PASS when ci_low <= bound, VIOLATION otherwise. Reports, never throws.
std::vector<BoundVerdict> verify_bound(const MCEstimate& est, std::span<const LabeledBound> bounds);

}  // namespace vcbound

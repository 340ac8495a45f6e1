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

#include "vcbound/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "vcbound/errors.hpp"
#include "vcbound/random.hpp"

namespace vcbound {
namespace {

void validate_config(const MCConfig& cfg) {
  if (cfg.trials == 0) throw DomainError("trials must be >= 1");
  if (cfg.worker_count == 0) throw DomainError("worker_count must be >= 1");
  if (!(cfg.confidence_level > 0.0 && cfg.confidence_level < 1.0)) {
    throw DomainError("confidence_level must lie in (0, 1)");
  }
}

// Counts trials in [0, trials) for which `hit(i)` holds, split over workers.
std::uint64_t count_hits(const MCConfig& cfg, const std::function<bool(std::uint64_t)>& hit) {
  const std::uint64_t workers = std::min<std::uint64_t>(cfg.worker_count, cfg.trials);
  std::vector<std::uint64_t> counts(workers, 0);
  auto run_block = [&](std::uint64_t w) {
    const std::uint64_t begin = cfg.trials * w / workers;
    const std::uint64_t end = cfg.trials * (w + 1) / workers;
    std::uint64_t c = 0;
    for (std::uint64_t i = begin; i < end; ++i) c += hit(i) ? 1 : 0;
    counts[w] = c;
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

MCEstimate make_estimate(std::uint64_t successes, const MCConfig& cfg) {
  MCEstimate e;
  e.successes = successes;
  e.trials = cfg.trials;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(cfg.trials);
  const auto ci = wilson_interval(successes, cfg.trials, cfg.confidence_level);
  e.ci_low = ci.low;
  e.ci_high = ci.high;
  e.confidence_level = cfg.confidence_level;
  e.base_seed = cfg.base_seed;
  return e;
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double level) {
  if (trials == 0) throw DomainError("wilson_interval: trials must be >= 1");
  if (successes > trials) throw DomainError("wilson_interval: successes exceed trials");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("wilson_interval: level must lie in (0, 1)");
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + 0.5 * level);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(center - half, 0.0, p), std::clamp(center + half, p, 1.0)};
}

MCEstimate estimate_bn(const HypothesisClass& cls, const Distribution& dist, std::size_t n,
                       double epsilon, const MCConfig& cfg) {
  validate_config(cfg);
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  // surface unsupported combinations before spawning workers
  sup_deviation_exact(sample(dist, n, derive_seed(cfg.base_seed, 0)), cls);
  const auto hits = count_hits(cfg, [&](std::uint64_t i) {
    const auto s = sample(dist, n, derive_seed(cfg.base_seed, i));
    return exceeds(sup_deviation_exact(s, cls).value, epsilon);
  });
  return make_estimate(hits, cfg);
}

MCEstimate estimate_single_tail(double p, std::int64_t n, double epsilon, const MCConfig& cfg) {
  validate_config(cfg);
  if (n < 1) throw DomainError("sample size n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  const double nd = static_cast<double>(n);
  const auto hits = count_hits(cfg, [&](std::uint64_t i) {
    SplitMix64 rng(derive_seed(cfg.base_seed, i));
    std::int64_t k = 0;
    for (std::int64_t j = 0; j < n; ++j) k += rng.uniform() < p ? 1 : 0;
    return exceeds(std::abs(static_cast<double>(k) - nd * p) / nd, epsilon);
  });
  return make_estimate(hits, cfg);
}

std::vector<BoundVerdict> verify_bound(const MCEstimate& est, std::span<const LabeledBound> bounds) {
  std::vector<BoundVerdict> out;
  out.reserve(bounds.size());
  for (const auto& b : bounds) {
    BoundVerdict v;
    v.label = b.label;
    v.bound = b.bound.clamped_total;
    v.ci_low = est.ci_low;
    v.margin = std::abs(v.bound - est.ci_low);
    v.violation = est.ci_low > v.bound;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace vcbound

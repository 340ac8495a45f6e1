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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vcbound/hypothesis_classes.hpp"

namespace vcbound {

// Enumeration guards. trace_count works on bitmasks over at most this many
// points; the shattering search is doubly exponential in r.
inline constexpr std::size_t kTraceEnumerationLimit = 22;
inline constexpr std::size_t kShatterSearchLimit = 8;

using TraceMask = std::uint32_t;

struct TraceReport {
  std::size_t point_count = 0;
  std::uint64_t distinct_traces = 0;
  bool shattered = false;
};

// A count that may exceed binary64; value is +inf once it overflows.
struct ExtendedCount {
  double value = 1.0;
  double log_value = 0.0;
};

struct SauerBound {
  ExtendedCount binomial_sum;     // sum_{i<=d} C(n, i)
  ExtendedCount exponential_form; // (e n / d)^d
};

struct VcCertificate {
  std::size_t dimension = 0;
  PointSet witness;  // a shattered configuration of that size
};

// Sorted distinct traces {points ∩ A : A in class}, bit i set when point i is
// in A. Built from a finite canonical set of hypotheses per class: thresholds
// at sample points and gap midpoints for 1-D classes, point-supported
// boundaries for half-spaces.
//
// Half-planes accept any configuration (repeated and collinear points
// included). Half-spaces in dimension >= 3 require general position and throw
// DomainError otherwise.
std::vector<TraceMask> trace_set(const PointSet& points, const HypothesisClass& cls);
std::vector<TraceMask> trace_set(const PointSet& points, std::span<const Hypothesis> family);

TraceReport trace_count(const PointSet& points, const HypothesisClass& cls);
TraceReport trace_count(const PointSet& points, std::span<const Hypothesis> family);

// Closed-form m_r: 2r for rays, r(r+1)/2 + 1 for intervals,
// 2 sum_{i<=d} C(r-1, i) for half-spaces in general position; 1 at r = 0.
ExtendedCount growth_exact(const HypothesisClass& cls, std::uint64_t r);

// Exact sum_{i<=d} C(n, i), log-space once it leaves the exact integer range.
ExtendedCount binomial_sum(std::uint64_t n, std::uint64_t d);

SauerBound sauer_bound(std::uint64_t n, std::uint64_t d);

// Largest r <= r_max for which a searched configuration is shattered:
// structured configurations plus `random_configs` random ones per r. A
// certified lower bound on the VC dimension.
VcCertificate vc_dimension_estimate(const HypothesisClass& cls, std::size_t r_max,
                                    std::size_t random_configs = 1000,
                                    std::uint64_t seed = 0x5eed);

// Same search for an explicit finite family of sets in R^dimension.
VcCertificate vc_dimension_estimate(std::span<const Hypothesis> family, std::size_t r_max,
                                    std::size_t random_configs = 1000,
                                    std::uint64_t seed = 0x5eed);

// Candidate configurations used by the searches above: structured ones first
// (moment curve / convex position / grid / evenly spaced), then random
// gaussian or small-integer configurations. Exposed for testing.
std::vector<PointSet> search_configurations(std::size_t dimension, std::size_t r,
                                            std::size_t random_configs, std::uint64_t seed);

// True when no three points are collinear (dimension 2) or no d + 1 points are
// affinely dependent (dimension d); exact sign tests, no tolerance.
bool in_general_position(const PointSet& points);

}  // namespace vcbound

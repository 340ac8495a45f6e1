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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vcbound {

// ---------------------------------------------------------------------------
// Set families

enum class ClassKind { rays_1d, intervals_1d, halfspaces };

// A concrete family of subsets of R^dimension. Rays are taken in both
// orientations ({x <= a} and {x >= a}); half-spaces are {x : w.x >= b} and
// their open variants.
class HypothesisClass {
 public:
  static HypothesisClass rays() { return {ClassKind::rays_1d, 1}; }
  static HypothesisClass intervals() { return {ClassKind::intervals_1d, 1}; }
  static HypothesisClass halfspaces(std::size_t dimension);

  ClassKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }

  // Known VC dimension: 2 for rays and intervals, d + 1 for half-spaces.
  std::size_t vc_dimension() const;

  std::string name() const;

  bool operator==(const HypothesisClass&) const = default;

 private:
  HypothesisClass(ClassKind kind, std::size_t dimension)
      : kind_(kind), dimension_(dimension) {}

  ClassKind kind_;
  std::size_t dimension_;
};

// Parses "rays", "intervals", "halfspaces" (dimension from the argument) or
// "halfplanes" (dimension 2). Throws DomainError on anything else.
HypothesisClass parse_class(std::string_view name, std::size_t dimension = 2);

// ---------------------------------------------------------------------------
// Individual sets

enum class RayOrientation { at_most, at_least };

struct Ray {
  RayOrientation orientation = RayOrientation::at_most;
  double threshold = 0.0;
  bool closed = true;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;
};

// {x : normal.x >= offset}, or {x : normal.x > offset} when !closed.
struct HalfSpace {
  std::vector<double> normal;
  double offset = 0.0;
  bool closed = true;
};

using Hypothesis = std::variant<Ray, Interval, HalfSpace>;

// Checked constructors; throw DomainError on lo > hi or a zero normal.
Interval make_interval(double lo, double hi, bool lo_closed = true, bool hi_closed = true);
HalfSpace make_halfspace(std::vector<double> normal, double offset, bool closed = true);

std::size_t dimension_of(const Hypothesis& h);

// ---------------------------------------------------------------------------
// Distributions and samples

enum class DistributionKind { uniform01, std_gaussian };

class Distribution {
 public:
  static Distribution uniform01() { return {DistributionKind::uniform01, 1}; }
  static Distribution std_gaussian(std::size_t dimension);

  DistributionKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  std::string name() const;

  bool operator==(const Distribution&) const = default;

 private:
  Distribution(DistributionKind kind, std::size_t dimension)
      : kind_(kind), dimension_(dimension) {}

  DistributionKind kind_;
  std::size_t dimension_;
};

// "uniform01" or "gaussian" / "std_gaussian" (dimension from the argument).
Distribution parse_distribution(std::string_view name, std::size_t dimension = 1);

// Row-major list of points in R^dimension.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dimension, std::vector<double> coords);

  static PointSet from_reals(std::span<const double> xs) {
    return PointSet(1, std::vector<double>(xs.begin(), xs.end()));
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return dimension_ == 0 ? 0 : coords_.size() / dimension_; }
  bool empty() const { return size() == 0; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dimension_, dimension_};
  }
  std::span<const double> coords() const { return coords_; }

  void push_back(std::span<const double> point);

 private:
  std::size_t dimension_ = 1;
  std::vector<double> coords_;
};

struct EmpiricalSample {
  PointSet points;
  Distribution distribution = Distribution::uniform01();
  std::uint64_t seed = 0;

  std::size_t n() const { return points.size(); }
};

// ---------------------------------------------------------------------------
// Operations

bool contains(const Hypothesis& h, std::span<const double> x);
inline bool contains(const Hypothesis& h, double x) { return contains(h, std::span<const double>(&x, 1)); }

double true_probability(const Hypothesis& h, const Distribution& dist);

// Draws n i.i.d. points. uniform01 uses SplitMix64 uniforms directly;
// std_gaussian uses the polar method on the same stream, coordinates filled
// row by row. Deterministic in (dist, n, seed).
EmpiricalSample sample(const Distribution& dist, std::size_t n, std::uint64_t seed);

// Largest sample for which sup_deviation_exact is offered, per class.
inline constexpr std::size_t kSupDeviationLimit1d = 10'000;
inline constexpr std::size_t kSupDeviationLimitHalfplanes = 300;

struct SupDeviation {
  double value = 0.0;  // sup over the class of |d_n(A) - P(A)|
  double above = 0.0;  // sup of d_n(A) - P(A)
  double below = 0.0;  // sup of P(A) - d_n(A)
};

// Exact supremum of |d_n(A) - P(A)| over the class. Supports rays and
// intervals (and 1-D half-spaces) for n <= 10^4, and half-planes under the
// 2-D standard gaussian for n <= 300. Throws UnsupportedError / SizeError
// outside that range.
SupDeviation sup_deviation_exact(const EmpiricalSample& s, const HypothesisClass& cls);

// CSV with header "index,coord_0[,coord_1,...]", numbers in shortest
// round-trip form.
void write_sample_csv(const EmpiricalSample& s, std::ostream& out);

// JSON sidecar {"schema_version","seed","distribution","dimension","n"}.
void write_sample_manifest(const EmpiricalSample& s, std::ostream& out);

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

}  // namespace vcbound

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

#include "vcbound/hypothesis_classes.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "vcbound/errors.hpp"
#include "vcbound/normal_approx.hpp"
#include "vcbound/random.hpp"

namespace vcbound {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// P(X <= x) for the 1-D law.
double cdf_1d(const Distribution& dist, double x) {
  return dist.kind() == DistributionKind::uniform01 ? clamp01(x) : std_normal_cdf(x);
}

// P(X >= x) for the 1-D law, accurate in the far upper tail.
double survival_1d(const Distribution& dist, double x) {
  return dist.kind() == DistributionKind::uniform01 ? 1.0 - clamp01(x)
                                                    : std_normal_upper_tail(x).value;
}

// P(lo <= X <= hi), computed on whichever side avoids cancellation.
double mass_between(const Distribution& dist, double lo, double hi) {
  if (dist.kind() == DistributionKind::uniform01) {
    return std::max(0.0, clamp01(hi) - clamp01(lo));
  }
  if (lo >= 0.0) return std::max(0.0, survival_1d(dist, lo) - survival_1d(dist, hi));
  if (hi <= 0.0) return std::max(0.0, cdf_1d(dist, hi) - cdf_1d(dist, lo));
  return std::max(0.0, cdf_1d(dist, hi) - cdf_1d(dist, lo));
}

// ---------------------------------------------------------------------------
// 1-D supremum after the probability-integral transform.

SupDeviation sup_rays(const std::vector<double>& u) {
  const double n = static_cast<double>(u.size());
  SupDeviation s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double k = static_cast<double>(i);
    s.above = std::max(s.above, (k + 1.0) / n - u[i]);
    s.below = std::max(s.below, u[i] - k / n);
  }
  s.value = std::max(s.above, s.below);
  return s;
}

SupDeviation sup_intervals(const std::vector<double>& u) {
  const std::size_t n = u.size();
  const double nd = static_cast<double>(n);
  SupDeviation s;
  // Closed intervals shrunk onto sample points: [u_i, u_j] holds j - i + 1.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      s.above = std::max(s.above, static_cast<double>(j - i + 1) / nd - (u[j] - u[i]));
    }
  }
  // Open intervals between samples, with sentinels 0 and 1 at the ends:
  // (v_i, v_j) over v = (0, u_1, ..., u_n, 1) holds j - i - 1 points.
  auto v = [&](std::size_t k) { return k == 0 ? 0.0 : (k == n + 1 ? 1.0 : u[k - 1]); };
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n + 1; ++j) {
      s.below = std::max(s.below, (v(j) - v(i)) - static_cast<double>(j - i - 1) / nd);
    }
  }
  s.value = std::max(s.above, s.below);
  return s;
}

// ---------------------------------------------------------------------------
// Half-planes under the 2-D standard gaussian.
//
// For a fixed trace the empirical measure is constant, so the supremum is a
// limit of boundaries at which the gaussian mass is extremal: lines through
// two sample points, or lines through one sample point q whose normal is
// parallel to q (the stationary points of w.q as the line rotates about q).
// Points on the boundary are counted both ways.

struct LineCounts {
  std::size_t positive = 0;
  std::size_t on = 0;
  std::size_t negative = 0;
};

void absorb_line(const LineCounts& c, double standardized_offset, double n, SupDeviation& s) {
  // standardized_offset = b / |w| for the side {w.x >= b}.
  const double p_pos = std_normal_upper_tail(standardized_offset).value;
  const double p_neg = std_normal_upper_tail(-standardized_offset).value;
  const std::array<std::pair<double, double>, 4> cands = {{
      {static_cast<double>(c.positive) / n, p_pos},
      {static_cast<double>(c.positive + c.on) / n, p_pos},
      {static_cast<double>(c.negative) / n, p_neg},
      {static_cast<double>(c.negative + c.on) / n, p_neg},
  }};
  for (const auto& [empirical, mass] : cands) {
    s.above = std::max(s.above, empirical - mass);
    s.below = std::max(s.below, mass - empirical);
  }
}

SupDeviation sup_halfplanes(const PointSet& pts) {
  const std::size_t n = pts.size();
  const double nd = static_cast<double>(n);
  SupDeviation s;

  for (std::size_t i = 0; i < n; ++i) {
    const double xi = pts[i][0];
    const double yi = pts[i][1];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = pts[j][0] - xi;
      const double dy = pts[j][1] - yi;
      if (dx == 0.0 && dy == 0.0) continue;
      LineCounts c;
      for (std::size_t k = 0; k < n; ++k) {
        const double cross = dx * (pts[k][1] - yi) - dy * (pts[k][0] - xi);
        if (cross > 0.0) {
          ++c.positive;
        } else if (cross < 0.0) {
          ++c.negative;
        } else {
          ++c.on;
        }
      }
      // normal w = (-dy, dx) makes w.(x - q_i) equal to the cross product above
      const double offset = -dy * xi + dx * yi;
      absorb_line(c, offset / std::hypot(dx, dy), nd, s);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double qx = pts[i][0];
    const double qy = pts[i][1];
    const double r = std::hypot(qx, qy);
    const double wx = r > 0.0 ? qx / r : 1.0;
    const double wy = r > 0.0 ? qy / r : 0.0;
    LineCounts c;
    for (std::size_t k = 0; k < n; ++k) {
      const double side = k == i ? 0.0 : wx * pts[k][0] + wy * pts[k][1] - r;
      if (side > 0.0) {
        ++c.positive;
      } else if (side < 0.0) {
        ++c.negative;
      } else {
        ++c.on;
      }
    }
    absorb_line(c, r, nd, s);
  }
  s.value = std::max(s.above, s.below);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

HypothesisClass HypothesisClass::halfspaces(std::size_t dimension) {
  if (dimension == 0) throw DomainError("half-spaces need dimension >= 1");
  return {ClassKind::halfspaces, dimension};
}

std::size_t HypothesisClass::vc_dimension() const {
  switch (kind_) {
    case ClassKind::rays_1d:
    case ClassKind::intervals_1d:
      return 2;
    case ClassKind::halfspaces:
      return dimension_ + 1;
  }
  return 0;
}

std::string HypothesisClass::name() const {
  switch (kind_) {
    case ClassKind::rays_1d:
      return "rays";
    case ClassKind::intervals_1d:
      return "intervals";
    case ClassKind::halfspaces:
      return dimension_ == 2 ? "halfplanes" : "halfspaces_" + std::to_string(dimension_);
  }
  return "unknown";
}

HypothesisClass parse_class(std::string_view name, std::size_t dimension) {
  if (name == "rays") return HypothesisClass::rays();
  if (name == "intervals") return HypothesisClass::intervals();
  if (name == "halfplanes") return HypothesisClass::halfspaces(2);
  if (name == "halfspaces") return HypothesisClass::halfspaces(dimension);
  throw DomainError("unknown hypothesis class '" + std::string(name) + "'");
}

Distribution Distribution::std_gaussian(std::size_t dimension) {
  if (dimension == 0) throw DomainError("gaussian needs dimension >= 1");
  return {DistributionKind::std_gaussian, dimension};
}

std::string Distribution::name() const {
  return kind_ == DistributionKind::uniform01 ? "uniform01"
                                              : "std_gaussian_" + std::to_string(dimension_);
}

Distribution parse_distribution(std::string_view name, std::size_t dimension) {
  if (name == "uniform01") {
    if (dimension != 1) throw DomainError("uniform01 is one-dimensional");
    return Distribution::uniform01();
  }
  if (name == "gaussian" || name == "std_gaussian") return Distribution::std_gaussian(dimension);
  throw DomainError("unknown distribution '" + std::string(name) + "'");
}

PointSet::PointSet(std::size_t dimension, std::vector<double> coords)
    : dimension_(dimension), coords_(std::move(coords)) {
  if (dimension_ == 0) throw DomainError("point dimension must be >= 1");
  if (coords_.size() % dimension_ != 0) {
    throw DomainError("coordinate count is not a multiple of the dimension");
  }
}

void PointSet::push_back(std::span<const double> point) {
  if (point.size() != dimension_) throw DomainError("point dimension mismatch");
  coords_.insert(coords_.end(), point.begin(), point.end());
}

Interval make_interval(double lo, double hi, bool lo_closed, bool hi_closed) {
  require_finite(lo, "interval endpoint");
  require_finite(hi, "interval endpoint");
  if (lo > hi) throw DomainError("interval requires lo <= hi");
  return {lo, hi, lo_closed, hi_closed};
}

HalfSpace make_halfspace(std::vector<double> normal, double offset, bool closed) {
  require_finite(offset, "half-space offset");
  if (normal.empty()) throw DomainError("half-space normal is empty");
  bool nonzero = false;
  for (double w : normal) {
    require_finite(w, "half-space normal");
    nonzero = nonzero || w != 0.0;
  }
  if (!nonzero) throw DomainError("half-space normal must be nonzero");
  return {std::move(normal), offset, closed};
}

std::size_t dimension_of(const Hypothesis& h) {
  return std::visit(Overloaded{[](const Ray&) -> std::size_t { return 1; },
                               [](const Interval&) -> std::size_t { return 1; },
                               [](const HalfSpace& hs) { return hs.normal.size(); }},
                    h);
}

bool contains(const Hypothesis& h, std::span<const double> x) {
  if (x.size() != dimension_of(h)) throw DomainError("contains: dimension mismatch");
  return std::visit(
      Overloaded{
          [&](const Ray& r) {
            if (r.orientation == RayOrientation::at_most) {
              return r.closed ? x[0] <= r.threshold : x[0] < r.threshold;
            }
            return r.closed ? x[0] >= r.threshold : x[0] > r.threshold;
          },
          [&](const Interval& iv) {
            const bool left = iv.lo_closed ? x[0] >= iv.lo : x[0] > iv.lo;
            const bool right = iv.hi_closed ? x[0] <= iv.hi : x[0] < iv.hi;
            return left && right;
          },
          [&](const HalfSpace& hs) {
            const double v = dot(hs.normal, x);
            return hs.closed ? v >= hs.offset : v > hs.offset;
          }},
      h);
}

double true_probability(const Hypothesis& h, const Distribution& dist) {
  if (dimension_of(h) != dist.dimension()) {
    throw DomainError("true_probability: dimension mismatch");
  }
  return std::visit(
      Overloaded{
          [&](const Ray& r) {
            require_finite(r.threshold, "ray threshold");
            return r.orientation == RayOrientation::at_most ? cdf_1d(dist, r.threshold)
                                                           : survival_1d(dist, r.threshold);
          },
          [&](const Interval& iv) { return mass_between(dist, iv.lo, iv.hi); },
          [&](const HalfSpace& hs) {
            const double norm = std::sqrt(dot(hs.normal, hs.normal));
            if (dist.kind() == DistributionKind::uniform01) {
              const double cut = hs.offset / hs.normal[0];
              return hs.normal[0] > 0.0 ? 1.0 - clamp01(cut) : clamp01(cut);
            }
            return std_normal_upper_tail(hs.offset / norm).value;
          }},
      h);
}

EmpiricalSample sample(const Distribution& dist, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> coords(n * dist.dimension());
  if (dist.kind() == DistributionKind::uniform01) {
    for (double& c : coords) c = rng.uniform();
  } else {
    PolarGaussian gauss(rng);
    for (double& c : coords) c = gauss.next();
  }
  return EmpiricalSample{PointSet(dist.dimension(), std::move(coords)), dist, seed};
}

SupDeviation sup_deviation_exact(const EmpiricalSample& s, const HypothesisClass& cls) {
  const std::size_t n = s.n();
  if (n == 0) throw DomainError("sup_deviation_exact: empty sample");
  if (s.distribution.dimension() != cls.dimension() ||
      s.points.dimension() != cls.dimension()) {
    throw DomainError("sup_deviation_exact: class and sample dimensions differ");
  }

  if (cls.dimension() == 1) {
    if (n > kSupDeviationLimit1d) {
      throw SizeError("sup_deviation_exact: 1-D classes support n <= " +
                      std::to_string(kSupDeviationLimit1d));
    }
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = cdf_1d(s.distribution, s.points[i][0]);
    std::stable_sort(u.begin(), u.end());
    return cls.kind() == ClassKind::intervals_1d ? sup_intervals(u) : sup_rays(u);
  }

  if (cls.kind() == ClassKind::halfspaces && cls.dimension() == 2) {
    if (n > kSupDeviationLimitHalfplanes) {
      throw SizeError("sup_deviation_exact: half-planes support n <= " +
                      std::to_string(kSupDeviationLimitHalfplanes));
    }
    return sup_halfplanes(s.points);
  }
  throw UnsupportedError("sup_deviation_exact: no exact method for " + cls.name());
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

void write_sample_csv(const EmpiricalSample& s, std::ostream& out) {
  out << "index";
  for (std::size_t c = 0; c < s.points.dimension(); ++c) out << ",coord_" << c;
  out << '\n';
  for (std::size_t i = 0; i < s.n(); ++i) {
    out << i;
    for (double v : s.points[i]) out << ',' << format_double(v);
    out << '\n';
  }
  if (!out) throw IoError("failed writing sample CSV");
}

void write_sample_manifest(const EmpiricalSample& s, std::ostream& out) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["seed"] = s.seed;
  j["distribution"] = s.distribution.kind() == DistributionKind::uniform01 ? "uniform01"
                                                                          : "std_gaussian";
  j["dimension"] = s.distribution.dimension();
  j["n"] = s.n();
  j["generator"] = "splitmix64/polar";
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing sample manifest");
}

}  // namespace vcbound

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

#include "vcbound/growth_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vcbound/errors.hpp"
#include "vcbound/random.hpp"

namespace vcbound {
namespace {

constexpr double kLn2 = 0.69314718055994530942;

TraceMask full_mask(std::size_t r) {
  return r == 32 ? ~TraceMask{0} : static_cast<TraceMask>((std::uint64_t{1} << r) - 1);
}

void check_guard(const PointSet& points) {
  if (points.size() > kTraceEnumerationLimit) {
    throw SizeError("trace enumeration supports at most " +
                    std::to_string(kTraceEnumerationLimit) + " points");
  }
}

std::vector<TraceMask> finish(std::vector<TraceMask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

TraceMask mask_of(const PointSet& points, const Hypothesis& h) {
  TraceMask m = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (contains(h, points[i])) m |= TraceMask{1} << i;
  }
  return m;
}

// Thresholds that realise every 1-D trace: each distinct value, each gap
// midpoint, and one value beyond either end.
std::vector<double> canonical_thresholds(const PointSet& points) {
  std::vector<double> v(points.coords().begin(), points.coords().end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<double> out;
  if (v.empty()) return out;
  out.push_back(v.front() - 1.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    if (i + 1 < v.size()) out.push_back(0.5 * (v[i] + v[i + 1]));
  }
  out.push_back(v.back() + 1.0);
  return out;
}

std::vector<TraceMask> traces_rays(const PointSet& points) {
  std::vector<TraceMask> masks{0};
  for (double t : canonical_thresholds(points)) {
    masks.push_back(mask_of(points, Ray{RayOrientation::at_most, t, true}));
    masks.push_back(mask_of(points, Ray{RayOrientation::at_least, t, true}));
  }
  return finish(std::move(masks));
}

std::vector<TraceMask> traces_intervals(const PointSet& points) {
  const auto cand = canonical_thresholds(points);
  std::vector<TraceMask> masks{0};
  for (std::size_t a = 0; a < cand.size(); ++a) {
    for (std::size_t b = a; b < cand.size(); ++b) {
      masks.push_back(mask_of(points, Interval{cand[a], cand[b], true, true}));
    }
  }
  return finish(std::move(masks));
}

// Half-planes: for every line through two distinct points, the strict sides
// plus any prefix or suffix (in order along the line) of the points on it.
std::vector<TraceMask> traces_halfplanes(const PointSet& pts) {
  const std::size_t r = pts.size();
  std::vector<TraceMask> masks{0, full_mask(r)};
  std::vector<std::pair<double, std::size_t>> on_line;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const double dx = pts[j][0] - pts[i][0];
      const double dy = pts[j][1] - pts[i][1];
      if (dx == 0.0 && dy == 0.0) continue;
      TraceMask pos = 0;
      TraceMask neg = 0;
      on_line.clear();
      for (std::size_t k = 0; k < r; ++k) {
        const double ex = pts[k][0] - pts[i][0];
        const double ey = pts[k][1] - pts[i][1];
        const double cross = dx * ey - dy * ex;
        if (cross > 0.0) {
          pos |= TraceMask{1} << k;
        } else if (cross < 0.0) {
          neg |= TraceMask{1} << k;
        } else {
          on_line.emplace_back(dx * ex + dy * ey, k);
        }
      }
      std::sort(on_line.begin(), on_line.end());
      std::vector<TraceMask> subsets{0};
      TraceMask prefix = 0;
      for (std::size_t a = 0; a < on_line.size(); ++a) {
        prefix |= TraceMask{1} << on_line[a].second;
        if (a + 1 == on_line.size() || on_line[a + 1].first != on_line[a].first) {
          subsets.push_back(prefix);
        }
      }
      TraceMask suffix = 0;
      for (std::size_t a = on_line.size(); a-- > 0;) {
        suffix |= TraceMask{1} << on_line[a].second;
        if (a == 0 || on_line[a - 1].first != on_line[a].first) subsets.push_back(suffix);
      }
      for (TraceMask u : subsets) {
        masks.push_back(pos | u);
        masks.push_back(neg | u);
      }
    }
  }
  return finish(std::move(masks));
}

// Determinant by Gaussian elimination with partial pivoting; an exactly zero
// pivot column yields 0.
double determinant(std::vector<double> a, std::size_t d) {
  double det = 1.0;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < d; ++r) {
      if (std::abs(a[r * d + c]) > std::abs(a[piv * d + c])) piv = r;
    }
    if (a[piv * d + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < d; ++k) std::swap(a[c * d + k], a[piv * d + k]);
      det = -det;
    }
    det *= a[c * d + c];
    for (std::size_t r = c + 1; r < d; ++r) {
      const double f = a[r * d + c] / a[c * d + c];
      for (std::size_t k = c; k < d; ++k) a[r * d + k] -= f * a[c * d + k];
    }
  }
  return det;
}

// Rank of the difference vectors p_i - p_0 (i.e. affine rank of the points).
std::size_t affine_rank(const PointSet& pts, std::span<const std::size_t> idx) {
  const std::size_t d = pts.dimension();
  if (idx.size() <= 1) return 0;
  const std::size_t rows = idx.size() - 1;
  std::vector<double> a(rows * d);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < d; ++c) a[r * d + c] = pts[idx[r + 1]][c] - pts[idx[0]][c];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < rows; ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (std::abs(a[r * d + c]) > std::abs(a[piv * d + c])) piv = r;
    }
    if (a[piv * d + c] == 0.0) continue;
    for (std::size_t k = 0; k < d; ++k) std::swap(a[rank * d + k], a[piv * d + k]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double f = a[r * d + c] / a[rank * d + c];
      for (std::size_t k = c; k < d; ++k) a[r * d + k] -= f * a[rank * d + k];
    }
    ++rank;
  }
  return rank;
}

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Half-spaces in dimension d >= 3, general position: every trace other than
// the trivial ones is realised by a hyperplane through d of the points, with
// any subset of those d on the chosen side.
std::vector<TraceMask> traces_halfspaces_general(const PointSet& pts) {
  const std::size_t r = pts.size();
  const std::size_t d = pts.dimension();
  std::vector<TraceMask> masks{0, full_mask(r)};
  if (r <= d) {
    std::vector<std::size_t> all(r);
    std::iota(all.begin(), all.end(), 0);
    if (affine_rank(pts, all) + 1 != r) {
      throw DomainError("half-space traces in dimension >= 3 need points in general position");
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) masks.push_back(static_cast<TraceMask>(m));
    return finish(std::move(masks));
  }
  std::vector<double> mat(d * d);
  for_each_combination(r, d, [&](std::span<const std::size_t> base) {
    TraceMask pos = 0;
    TraceMask neg = 0;
    TraceMask on = 0;
    for (std::size_t i : base) on |= TraceMask{1} << i;
    for (std::size_t k = 0; k < r; ++k) {
      if (on & (TraceMask{1} << k)) continue;
      for (std::size_t row = 0; row + 1 < d; ++row) {
        for (std::size_t c = 0; c < d; ++c) mat[row * d + c] = pts[base[row + 1]][c] - pts[base[0]][c];
      }
      for (std::size_t c = 0; c < d; ++c) mat[(d - 1) * d + c] = pts[k][c] - pts[base[0]][c];
      const double side = determinant(mat, d);
      if (side == 0.0) {
        throw DomainError("half-space traces in dimension >= 3 need points in general position");
      }
      (side > 0.0 ? pos : neg) |= TraceMask{1} << k;
    }
    // every subset of the d boundary points
    for (TraceMask u = on;; u = (u - 1) & on) {
      masks.push_back(pos | u);
      masks.push_back(neg | u);
      if (u == 0) break;
    }
  });
  return finish(std::move(masks));
}

ExtendedCount from_exact(long double v) {
  return {static_cast<double>(v), static_cast<double>(std::log(v))};
}

ExtendedCount scaled(ExtendedCount c, double factor) {
  return {c.value * factor, c.log_value + std::log(factor)};
}

}  // namespace

std::vector<TraceMask> trace_set(const PointSet& points, const HypothesisClass& cls) {
  check_guard(points);
  if (points.dimension() != cls.dimension()) throw DomainError("trace_set: dimension mismatch");
  if (points.empty()) return {0};
  switch (cls.kind()) {
    case ClassKind::rays_1d:
      return traces_rays(points);
    case ClassKind::intervals_1d:
      return traces_intervals(points);
    case ClassKind::halfspaces:
      if (cls.dimension() == 1) return traces_rays(points);
      if (cls.dimension() == 2) return traces_halfplanes(points);
      return traces_halfspaces_general(points);
  }
  throw UnsupportedError("trace_set: unsupported class");
}

std::vector<TraceMask> trace_set(const PointSet& points, std::span<const Hypothesis> family) {
  check_guard(points);
  if (family.empty()) throw DomainError("trace_set: empty family");
  std::vector<TraceMask> masks;
  masks.reserve(family.size());
  for (const auto& h : family) {
    if (dimension_of(h) != points.dimension()) throw DomainError("trace_set: dimension mismatch");
    masks.push_back(mask_of(points, h));
  }
  return finish(std::move(masks));
}

namespace {
TraceReport report_for(std::size_t r, std::size_t distinct) {
  return {r, distinct, distinct == (std::uint64_t{1} << r)};
}
}  // namespace

TraceReport trace_count(const PointSet& points, const HypothesisClass& cls) {
  return report_for(points.size(), trace_set(points, cls).size());
}

TraceReport trace_count(const PointSet& points, std::span<const Hypothesis> family) {
  return report_for(points.size(), trace_set(points, family).size());
}

ExtendedCount binomial_sum(std::uint64_t n, std::uint64_t d) {
  if (d >= n) {
    if (n < 1000) return {std::ldexp(1.0, static_cast<int>(n)), static_cast<double>(n) * kLn2};
    return {std::numeric_limits<double>::infinity(), static_cast<double>(n) * kLn2};
  }
  // Exact while the sum stays within the integers binary64 represents exactly.
  // C(n, i+1) = C(n, i) (n - i) / (i + 1), reduced by a gcd so the product
  // only overflows when the result would.
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 53;
  std::uint64_t term = 1;
  std::uint64_t sum = 1;
  bool exact = true;
  for (std::uint64_t i = 0; i < d && exact; ++i) {
    const std::uint64_t g = std::gcd(n - i, i + 1);
    const std::uint64_t num = (n - i) / g;
    const std::uint64_t den = (i + 1) / g;
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(term / den, num, &next) || next > kLimit) {
      exact = false;
      break;
    }
    term = next;
    sum += term;
    exact = sum <= kLimit;
  }
  if (exact) return from_exact(static_cast<long double>(sum));

  // Past 2^53 the extended type keeps the relative error near d ulps; log
  // space only once even that range runs out.
  long double lterm = 1.0L;
  long double lsum = 1.0L;
  for (std::uint64_t i = 0; i < d; ++i) {
    lterm *= static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    lsum += lterm;
    if (lsum > 1e4900L) break;
  }
  if (lsum <= 1e4900L) return from_exact(lsum);

  const double nd = static_cast<double>(n);
  double log_sum = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i <= d; ++i) {
    const double id = static_cast<double>(i);
    const double log_term = std::lgamma(nd + 1.0) - std::lgamma(id + 1.0) - std::lgamma(nd - id + 1.0);
    const double hi = std::max(log_sum, log_term);
    const double lo = std::min(log_sum, log_term);
    log_sum = lo == -std::numeric_limits<double>::infinity() ? hi : hi + std::log1p(std::exp(lo - hi));
  }
  return {std::exp(log_sum), log_sum};
}

ExtendedCount growth_exact(const HypothesisClass& cls, std::uint64_t r) {
  if (r == 0) return {1.0, 0.0};
  switch (cls.kind()) {
    case ClassKind::rays_1d:
      return from_exact(2.0L * static_cast<long double>(r));
    case ClassKind::intervals_1d: {
      const long double rl = static_cast<long double>(r);
      return from_exact(rl * (rl + 1.0L) / 2.0L + 1.0L);
    }
    case ClassKind::halfspaces:
      return scaled(binomial_sum(r - 1, cls.dimension()), 2.0);
  }
  throw UnsupportedError("growth_exact: unsupported class");
}

SauerBound sauer_bound(std::uint64_t n, std::uint64_t d) {
  if (n == 0 || d == 0) throw DomainError("sauer_bound: requires n >= 1 and d >= 1");
  SauerBound s;
  s.binomial_sum = binomial_sum(n, d);
  const double dd = static_cast<double>(d);
  s.exponential_form.log_value = dd * (1.0 + std::log(static_cast<double>(n)) - std::log(dd));
  s.exponential_form.value = std::exp(s.exponential_form.log_value);
  return s;
}

bool in_general_position(const PointSet& points) {
  const std::size_t r = points.size();
  const std::size_t d = points.dimension();
  if (r == 0) return true;
  bool ok = true;
  // any d + 1 points (or all of them, when fewer) must be affinely independent
  const std::size_t k = std::min(r, d + 1);
  for_each_combination(r, k, [&](std::span<const std::size_t> idx) {
    if (!ok) return;
    if (d == 2 && idx.size() == 3) {
      const auto a = points[idx[0]];
      const auto b = points[idx[1]];
      const auto c = points[idx[2]];
      ok = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) != 0.0;
      return;
    }
    ok = affine_rank(points, idx) + 1 == idx.size();
  });
  return ok;
}

std::vector<PointSet> search_configurations(std::size_t dimension, std::size_t r,
                                            std::size_t random_configs, std::uint64_t seed) {
  std::vector<PointSet> out;
  if (r == 0) {
    out.emplace_back(dimension, std::vector<double>{});
    return out;
  }
  // moment curve (t, t^2, ..., t^d): general and, for d = 2, convex position
  {
    std::vector<double> c;
    for (std::size_t t = 1; t <= r; ++t) {
      double v = 1.0;
      for (std::size_t k = 0; k < dimension; ++k) {
        v *= static_cast<double>(t);
        c.push_back(v);
      }
    }
    out.emplace_back(dimension, std::move(c));
  }
  if (dimension == 2) {
    // integer grid, row-major: deliberately degenerate
    const std::size_t w = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(r))));
    std::vector<double> c;
    for (std::size_t i = 0; i < r; ++i) {
      c.push_back(static_cast<double>(i % w));
      c.push_back(static_cast<double>(i / w));
    }
    out.emplace_back(2, std::move(c));
  }
  SplitMix64 rng(derive_seed(seed, r * 131 + dimension));
  PolarGaussian gauss(rng);
  for (std::size_t k = 0; k < random_configs; ++k) {
    std::vector<double> c(r * dimension);
    if (k % 2 == 0) {
      for (double& v : c) v = gauss.next();
    } else {
      // small integers, so exact orientation tests and ties both occur
      for (double& v : c) v = std::floor(rng.uniform() * 2001.0) - 1000.0;
    }
    out.emplace_back(dimension, std::move(c));
  }
  return out;
}

namespace {

template <class Count>
VcCertificate shatter_search(std::size_t dimension, std::size_t r_max, std::size_t random_configs,
                             std::uint64_t seed, const std::vector<double>& pool, Count&& count) {
  if (r_max > kShatterSearchLimit) {
    throw SizeError("vc_dimension_estimate supports r_max <= " + std::to_string(kShatterSearchLimit));
  }
  VcCertificate cert;
  cert.witness = PointSet(dimension, {});
  for (std::size_t r = 1; r <= r_max; ++r) {
    auto configs = search_configurations(dimension, r, random_configs, seed);
    if (!pool.empty()) {
      SplitMix64 rng(derive_seed(seed ^ 0xA5A5A5A5ULL, r));
      for (std::size_t k = 0; k < random_configs; ++k) {
        std::vector<double> c(r);
        for (double& v : c) v = pool[static_cast<std::size_t>(rng.uniform() * static_cast<double>(pool.size()))];
        std::sort(c.begin(), c.end());
        configs.emplace_back(1, std::move(c));
      }
    }
    for (const auto& cfg : configs) {
      TraceReport rep;
      try {
        rep = count(cfg);
      } catch (const DomainError&) {
        continue;  // degenerate configuration for a general-position method
      }
      if (rep.shattered) {
        cert.dimension = r;
        cert.witness = cfg;
        break;
      }
    }
  }
  return cert;
}

}  // namespace

VcCertificate vc_dimension_estimate(const HypothesisClass& cls, std::size_t r_max,
                                    std::size_t random_configs, std::uint64_t seed) {
  return shatter_search(cls.dimension(), r_max, random_configs, seed, {},
                        [&](const PointSet& p) { return trace_count(p, cls); });
}

VcCertificate vc_dimension_estimate(std::span<const Hypothesis> family, std::size_t r_max,
                                    std::size_t random_configs, std::uint64_t seed) {
  if (family.empty()) throw DomainError("vc_dimension_estimate: empty family");
  const std::size_t dim = dimension_of(family.front());
  // For 1-D families, also try points placed at and between the sets' own
  // boundaries, where random reals rarely land.
  std::vector<double> pool;
  if (dim == 1) {
    for (const auto& h : family) {
      if (const auto* ray = std::get_if<Ray>(&h)) pool.push_back(ray->threshold);
      if (const auto* iv = std::get_if<Interval>(&h)) {
        pool.push_back(iv->lo);
        pool.push_back(iv->hi);
      }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const std::size_t base = pool.size();
    for (std::size_t i = 0; i + 1 < base; ++i) pool.push_back(0.5 * (pool[i] + pool[i + 1]));
    if (base > 0) {
      pool.push_back(pool.front() - 1.0);
      pool.push_back(pool[base - 1] + 1.0);
    }
  }
  return shatter_search(dim, r_max, random_configs, seed, pool,
                        [&](const PointSet& p) { return trace_count(p, family); });
}

}  // namespace vcbound

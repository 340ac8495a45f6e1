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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

const Big& pi() {
  static const Big v = boost::multiprecision::acos(Big(-1));
  return v;
}

// erf(z) = 2/sqrt(pi) e^{-z^2} sum_k 2^k z^{2k+1} / (2k+1)!!, every term positive
Big erf_series(const Big& z) {
  const Big z2 = z * z;
  Big term = z;
  Big sum = term;
  for (int k = 1; k < 2000; ++k) {
    term *= 2 * z2 / (2 * k + 1);
    sum += term;
    if (k > z2 && term < sum * Big("1e-55")) {
      return 2 / sqrt(pi()) * exp(-z2) * sum;
    }
  }
  throw std::runtime_error("erf series did not converge");
}

Big upper_tail_big(const Big& x) {
  const Big z = x / sqrt(Big(2));
  if (x >= 0) return (1 - erf_series(z)) / 2;
  return (1 + erf_series(-z)) / 2;
}

}  // namespace

double phi(double x) {
  return static_cast<double>(1 - upper_tail_big(Big(x)));
}

double log_upper_tail(double x) {
  if (x <= 10.0) return static_cast<double>(log(upper_tail_big(Big(x))));
  // Q(x) = phi(x)/x * sum_k (-1)^k (2k-1)!! / x^{2k}; partial sums alternate
  // around Q, so stopping while terms still shrink leaves an error below the
  // last term kept.
  const Big bx(x);
  const Big inv2 = 1 / (bx * bx);
  Big term = 1;
  Big sum = 1;
  for (int k = 1; k < 400; ++k) {
    const Big next = -term * (2 * k - 1) * inv2;
    if (abs(next) >= abs(term) || abs(term) < Big("1e-40")) break;
    term = next;
    sum += term;
  }
  if (abs(term) > Big("1e-20")) throw std::runtime_error("asymptotic series too coarse");
  const Big log_density = -bx * bx / 2 - log(sqrt(2 * pi()));
  return static_cast<double>(log_density - log(bx) + log(sum));
}

double binomial_tail(std::int64_t n, double p, double eps) {
  const Big bp(p);
  const Big q = 1 - bp;
  const Big tol = Big(1e-12) * std::max(1.0, std::abs(eps));
  Big coef = 1;  // C(n, k)
  Big total = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) coef = coef * (n - k + 1) / k;
    const Big dev = abs(Big(k) / n - bp);
    if (dev - Big(eps) > tol) {
      total += coef * pow(bp, k) * pow(q, n - k);
    }
  }
  return static_cast<double>(total);
}

std::uint64_t ray_traces(std::span<const double> xs) {
  const std::size_t r = xs.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
    // a down-set {x <= t} or an up-set {x >= t}
    bool down = true;
    bool up = true;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const bool in_i = (mask >> i) & 1;
        const bool in_j = (mask >> j) & 1;
        if (in_i && !in_j && xs[j] <= xs[i]) down = false;
        if (in_i && !in_j && xs[j] >= xs[i]) up = false;
      }
    }
    if (down || up) ++count;
  }
  return count;
}

std::uint64_t interval_traces(std::span<const double> xs) {
  const std::size_t r = xs.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
    // no excluded point may sit between two included ones
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      for (std::size_t j = 0; j < r && ok; ++j) {
        for (std::size_t k = 0; k < r && ok; ++k) {
          if (((mask >> i) & 1) && ((mask >> j) & 1) && !((mask >> k) & 1) && xs[i] <= xs[k] &&
              xs[k] <= xs[j]) {
            ok = false;
          }
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

struct P2 {
  double x, y;
};

double orient(P2 a, P2 b, P2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool on_segment(P2 a, P2 b, P2 p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(P2 a, P2 b, P2 c, P2 d) {
  const double d1 = orient(c, d, a);
  const double d2 = orient(c, d, b);
  const double d3 = orient(a, b, c);
  const double d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  return on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) || on_segment(a, b, d);
}

bool in_triangle(P2 a, P2 b, P2 c, P2 p) {
  if (orient(a, b, c) == 0) return on_segment(a, b, p) || on_segment(b, c, p) || on_segment(a, c, p);
  const double o1 = orient(a, b, p);
  const double o2 = orient(b, c, p);
  const double o3 = orient(c, a, p);
  return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
}

// p lies in conv(s): by Caratheodory, in some (possibly degenerate) triangle
bool in_hull(const std::vector<P2>& s, P2 p) {
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (s[i].x == p.x && s[i].y == p.y) return true;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (on_segment(s[i], s[j], p)) return true;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (in_triangle(s[i], s[j], s[k], p)) return true;
      }
    }
  }
  return false;
}

bool hulls_meet(const std::vector<P2>& a, const std::vector<P2>& b) {
  for (const auto& p : a) {
    if (in_hull(b, p)) return true;
  }
  for (const auto& p : b) {
    if (in_hull(a, p)) return true;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t l = k + 1; l < b.size(); ++l) {
          if (segments_meet(a[i], a[j], b[k], b[l])) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::uint64_t halfplane_traces(std::span<const double> xy) {
  const std::size_t r = xy.size() / 2;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
    std::vector<P2> in;
    std::vector<P2> out;
    for (std::size_t i = 0; i < r; ++i) {
      ((mask >> i) & 1 ? in : out).push_back({xy[2 * i], xy[2 * i + 1]});
    }
    // two finite sets are separated by a line iff their hulls are disjoint
    if (in.empty() || out.empty() || !hulls_meet(in, out)) ++count;
  }
  return count;
}

double ks_statistic(std::span<const double> us) {
  const double n = static_cast<double>(us.size());
  double best = 0.0;
  for (const double t : us) {
    std::size_t at_most = 0;
    std::size_t below = 0;
    for (const double u : us) {
      if (u <= t) ++at_most;
      if (u < t) ++below;
    }
    best = std::max(best, static_cast<double>(at_most) / n - t);
    best = std::max(best, t - static_cast<double>(below) / n);
  }
  return best;
}

double interval_grid_sup(std::span<const double> us, std::size_t g) {
  std::vector<double> sorted(us.begin(), us.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<double> le(g + 1);
  std::vector<double> lt(g + 1);
  for (std::size_t i = 0; i <= g; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(g);
    le[i] = static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
    lt[i] = static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
  }
  double best = 0.0;
  for (std::size_t a = 0; a <= g; ++a) {
    for (std::size_t b = a; b <= g; ++b) {
      const double len = static_cast<double>(b - a) / static_cast<double>(g);
      const double closed = (le[b] - lt[a]) / n;
      const double open = std::max(0.0, lt[b] - le[a]) / n;
      best = std::max({best, closed - len, len - open, std::abs((lt[b] - lt[a]) / n - len),
                       std::abs((le[b] - le[a]) / n - len)});
    }
  }
  return best;
}

double halfplane_search_sup(std::span<const double> xy, std::size_t directions,
                            std::uint64_t seed) {
  const std::size_t n = xy.size() / 2;
  const double dn = static_cast<double>(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> proj(n);
  double best = 0.0;
  for (std::size_t k = 0; k < directions; ++k) {
    const double t = angle(rng);
    const double w0 = std::cos(t);
    const double w1 = std::sin(t);
    for (std::size_t i = 0; i < n; ++i) proj[i] = w0 * xy[2 * i] + w1 * xy[2 * i + 1];
    std::sort(proj.begin(), proj.end());
    // {w.x >= b} for b at each projection: closed keeps the point, open drops it
    for (std::size_t i = 0; i < n; ++i) {
      const double mass = 0.5 * std::erfc(proj[i] / std::sqrt(2.0));
      std::size_t first = i;
      while (first > 0 && proj[first - 1] == proj[i]) --first;
      std::size_t last = i;
      while (last + 1 < n && proj[last + 1] == proj[i]) ++last;
      const double closed = static_cast<double>(n - first) / dn;
      const double open = static_cast<double>(n - last - 1) / dn;
      best = std::max({best, closed - mass, mass - open});
    }
  }
  return best;
}

}  // namespace oracle

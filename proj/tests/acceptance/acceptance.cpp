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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "oracles.hpp"
#include "vcbound/vcbound.h"

namespace fs = std::filesystem;

namespace {

constexpr double kC = VCB_DEFAULT_BE_CONSTANT;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Library calls in here are expected to succeed; a failure is a test failure.
struct CallFailed {
  std::string what;
};

void ok(vcb_status s, const char* call) {
  if (s != VCB_OK) throw CallFailed{std::string(call) + ": " + vcb_last_error()};
}

#define CALL(expr) ok((expr), #expr)

std::vector<double> steps(double lo, double step, int count) {
  std::vector<double> v;
  for (int i = 0; i < count; ++i) v.push_back(std::round((lo + step * i) * 1e12) / 1e12);
  return v;
}

const std::vector<double>& eps_grid() {
  static const auto g = steps(0.02, 0.02, 20);  // 0.02 .. 0.40
  return g;
}

double tail(std::int64_t n, double p, double eps) {
  double t = 0.0;
  CALL(vcb_exact_binomial_tail(n, p, eps, &t));
  return t;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome inequality_chain() {
  const auto start = std::chrono::steady_clock::now();
  int points = 0;
  int be_violations = 0;
  int mills_violations = 0;
  int oracle_violations = 0;
  for (std::int64_t n = 10; n <= 200; n += 10) {
    for (double eps : eps_grid()) {
      ++points;
      vcb_breakdown moment{};
      CALL(vcb_refined_single(n, 0.5, eps, VCB_VARIANT_MOMENT, kC, &moment));
      const double exact = tail(n, 0.5, eps);
      if (exact > moment.raw_total) ++be_violations;
      if (oracle::binomial_tail(n, 0.5, eps) > moment.raw_total) ++oracle_violations;

      // 2 Q(2 eps sqrt n) <= e^{-2 n eps^2} / (eps sqrt(2 pi n)), compared in logs
      const double x = 2.0 * eps * std::sqrt(static_cast<double>(n));
      vcb_tail q{};
      CALL(vcb_std_normal_upper_tail(x, &q));
      const double lhs = std::log(2.0) + q.log_value;
      const double rhs = -2.0 * n * eps * eps - std::log(eps * std::sqrt(2.0 * std::numbers::pi * n));
      if (lhs > rhs) ++mills_violations;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = be_violations == 0 && mills_violations == 0 && oracle_violations == 0 && secs < 10.0;
  o.detail = fmt("%d grid points; tail > moment bound: %d (oracle tail: %d); normal tail > Mills step: %d; %.2f s",
                 points, be_violations, oracle_violations, mills_violations, secs);
  return o;
}

Outcome hoeffding_validity() {
  int points = 0;
  int violations = 0;
  for (std::int64_t n = 5; n <= 200; n += 5) {
    for (double p : steps(0.05, 0.05, 19)) {
      for (double eps : eps_grid()) {
        ++points;
        vcb_breakdown h{};
        CALL(vcb_hoeffding_single(n, eps, &h));
        if (tail(n, p, eps) > h.raw_total) ++violations;
      }
    }
  }
  return {violations == 0, fmt("%d grid points (n, p, eps), %d violations", points, violations)};
}

Outcome mills_lemma() {
  int violations = 0;
  int oracle_violations = 0;
  const int count = 10'000;
  for (int i = 1; i <= count; ++i) {
    const double x = 40.0 * i / count;
    vcb_tail q{};
    vcb_tail m{};
    CALL(vcb_std_normal_upper_tail(x, &q));
    CALL(vcb_mills_upper_bound(x, &m));
    const bool holds = x <= 10.0 ? q.value <= m.value : q.log_value <= m.log_value;
    if (!holds) ++violations;
    if (oracle::log_upper_tail(x) > m.log_value) ++oracle_violations;
  }
  vcb_tail q10{};
  vcb_tail m10{};
  CALL(vcb_std_normal_upper_tail(10.0, &q10));
  CALL(vcb_mills_upper_bound(10.0, &m10));
  const double ratio = std::exp(q10.log_value - m10.log_value);
  return {violations == 0 && oracle_violations == 0 && ratio >= 0.99,
          fmt("%d points in (0, 40], %d violations (oracle tail: %d), ratio at x = 10: %.6f", count,
              violations, oracle_violations, ratio)};
}

Outcome phi_accuracy() {
  const int count = 100'000;
  const unsigned threads = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
  std::vector<double> worst(threads, 0.0);
  std::vector<double> worst_x(threads, 0.0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = static_cast<int>(t); i < count; i += static_cast<int>(threads)) {
        const double x = -8.0 + 16.0 * i / (count - 1);
        double phi = 0.0;
        vcb_std_normal_cdf(x, &phi);
        const double err = std::abs(phi - oracle::phi(x));
        if (!(err <= worst[t])) {
          worst[t] = err;
          worst_x[t] = x;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  const auto it = std::max_element(worst.begin(), worst.end());
  const double max_err = *it;
  return {max_err <= 1e-12, fmt("%d points in [-8, 8], max |error| %.3g at x = %.5f", count, max_err,
                                worst_x[it - worst.begin()])};
}

double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

std::uint64_t traces(const std::vector<double>& coords, std::size_t r, vcb_class cls) {
  vcb_trace_report rep{};
  CALL(vcb_trace_count(coords.data(), r, cls, &rep));
  return rep.distinct_traces;
}

Outcome growth_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<int> lattice(-1000, 1000);
  const vcb_class rays{VCB_CLASS_RAYS, 1};
  const vcb_class intervals{VCB_CLASS_INTERVALS, 1};
  const vcb_class halfplanes{VCB_CLASS_HALFSPACES, 2};
  int mismatches = 0;
  int oracle_mismatches = 0;
  int sauer_mismatches = 0;
  std::size_t configs = 0;

  for (std::size_t r = 0; r <= 10; ++r) {
    std::vector<std::vector<double>> line;  // 1-D configurations
    std::vector<std::vector<double>> plane; // 2-D configurations
    std::vector<double> spaced;
    std::vector<double> polygon;
    std::vector<double> moment;
    std::vector<double> grid;
    for (std::size_t i = 0; i < r; ++i) {
      spaced.push_back(static_cast<double>(i));
      const double a = 2.0 * std::numbers::pi * i / r;
      polygon.insert(polygon.end(), {std::cos(a), std::sin(a)});
      moment.insert(moment.end(), {double(i + 1), double((i + 1) * (i + 1))});
      grid.insert(grid.end(), {double(i % 3), double(i / 3)});
    }
    line.push_back(spaced);
    plane.push_back(polygon);
    plane.push_back(moment);
    plane.push_back(grid);
    for (int k = 0; k < 1000; ++k) {
      std::vector<double> xs(r);
      for (auto& x : xs) x = gauss(rng);
      line.push_back(xs);
      std::vector<double> xy(2 * r);
      for (auto& v : xy) v = k % 2 ? gauss(rng) : lattice(rng);
      plane.push_back(xy);
    }
    configs += line.size() + plane.size();

    std::uint64_t best_rays = 0;
    std::uint64_t best_intervals = 0;
    std::uint64_t best_halfplanes = 0;
    for (std::size_t k = 0; k < line.size(); ++k) {
      const auto tr = traces(line[k], r, rays);
      const auto ti = traces(line[k], r, intervals);
      best_rays = std::max(best_rays, tr);
      best_intervals = std::max(best_intervals, ti);
      if (k < 25 && (tr != oracle::ray_traces(line[k]) || ti != oracle::interval_traces(line[k]))) {
        ++oracle_mismatches;
      }
    }
    for (std::size_t k = 0; k < plane.size(); ++k) {
      const auto th = traces(plane[k], r, halfplanes);
      best_halfplanes = std::max(best_halfplanes, th);
      // lattice configurations keep the oracle's predicates exact
      if (k >= 3 && k < 43 && (k - 3) % 2 == 0 && th != oracle::halfplane_traces(plane[k])) {
        ++oracle_mismatches;
      }
    }

    const int ri = static_cast<int>(r);
    const double want_rays = r == 0 ? 1.0 : 2.0 * ri;
    const double want_intervals = ri * (ri + 1) / 2.0 + 1.0;
    const double want_halfplanes =
        r == 0 ? 1.0 : 2.0 * (choose(ri - 1, 0) + choose(ri - 1, 1) + choose(ri - 1, 2));
    vcb_count g{};
    CALL(vcb_growth_exact(rays, r, &g));
    if (g.value != want_rays || double(best_rays) != want_rays) ++mismatches;
    CALL(vcb_growth_exact(intervals, r, &g));
    if (g.value != want_intervals || double(best_intervals) != want_intervals) ++mismatches;
    CALL(vcb_growth_exact(halfplanes, r, &g));
    if (g.value != want_halfplanes || double(best_halfplanes) != want_halfplanes) ++mismatches;

    const double sauer = choose(ri, 0) + choose(ri, 1) + choose(ri, 2);
    if (want_intervals != sauer) ++sauer_mismatches;
    if (r >= 1) {
      vcb_count sum{};
      vcb_count expo{};
      CALL(vcb_sauer_bound(r, 2, &sum, &expo));
      if (sum.value != sauer || double(best_intervals) != sum.value) ++sauer_mismatches;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && oracle_mismatches == 0 && sauer_mismatches == 0 && secs < 60.0,
          fmt("r = 0..10, %zu configurations; closed form vs enumeration max: %d mismatches; "
              "brute-force cross-check: %d; intervals vs Sauer sum: %d; %.2f s",
              configs, mismatches, oracle_mismatches, sauer_mismatches, secs)};
}

Outcome vc_dimensions() {
  auto estimate = [](vcb_class cls, std::vector<double>& witness) {
    vcb_vc_certificate* cert = nullptr;
    CALL(vcb_vc_dimension_estimate(cls, 6, 1000, 7, &cert));
    const std::size_t d = vcb_vc_certificate_dimension(cert);
    std::size_t count = 0;
    const double* w = vcb_vc_certificate_witness(cert, &count);
    witness.assign(w, w + count * cls.dimension);
    vcb_vc_certificate_free(cert);
    return d;
  };
  std::vector<double> wi;
  std::vector<double> wh;
  const std::size_t di = estimate({VCB_CLASS_INTERVALS, 1}, wi);
  const std::size_t dh = estimate({VCB_CLASS_HALFSPACES, 2}, wh);
  // witnesses must be shattered by the brute-force criterion too
  const bool witnesses = oracle::interval_traces(wi) == (1ULL << di) &&
                         oracle::halfplane_traces(wh) == (1ULL << dh);
  return {di == 2 && dh == 3 && witnesses,
          fmt("intervals: %zu, half-planes: %zu, witnesses %s", di, dh,
              witnesses ? "shattered" : "NOT shattered")};
}

std::vector<double> sample_coords(std::size_t n, std::uint64_t seed) {
  vcb_sample* s = nullptr;
  CALL(vcb_sample_create({VCB_DIST_UNIFORM01, 1}, n, seed, &s));
  std::vector<double> u(vcb_sample_coords(s), vcb_sample_coords(s) + n);
  vcb_sample_free(s);
  return u;
}

double sup_dev(const std::vector<double>& u, vcb_class cls) {
  vcb_sample* s = nullptr;
  CALL(vcb_sample_from_points({VCB_DIST_UNIFORM01, 1}, u.data(), u.size(), &s));
  vcb_sup_deviation d{};
  const vcb_status st = vcb_sup_deviation_exact(s, cls, &d);
  vcb_sample_free(s);
  ok(st, "vcb_sup_deviation_exact");
  return d.value;
}

Outcome sup_deviation() {
  const std::size_t sizes[] = {4, 10, 50};
  double worst_gap = 0.0;
  int above_exact = 0;
  for (int k = 0; k < 50; ++k) {
    const auto u = sample_coords(sizes[k % 3], 1000 + k);
    const double exact = sup_dev(u, {VCB_CLASS_INTERVALS, 1});
    const double grid = oracle::interval_grid_sup(u, 2000);
    if (grid > exact + 1e-12) ++above_exact;
    worst_gap = std::max(worst_gap, std::abs(exact - grid));
  }
  int ks_mismatch = 0;
  for (int k = 0; k < 100; ++k) {
    const auto u = sample_coords(5 + (k * 37) % 400, 5000 + k);
    if (sup_dev(u, {VCB_CLASS_RAYS, 1}) != oracle::ks_statistic(u)) ++ks_mismatch;
  }
  return {worst_gap <= 2e-3 && above_exact == 0 && ks_mismatch == 0,
          fmt("intervals vs 2000^2 grid: max gap %.3g (grid above exact: %d) over 50 samples; "
              "rays vs KS: %d mismatches over 100 samples",
              worst_gap, above_exact, ks_mismatch)};
}

std::string simulate_json(unsigned workers) {
  vcbound::cli::SimulateOptions o;
  o.class_name = "intervals";
  o.distribution = "uniform01";
  o.n = 50;
  o.epsilon = 0.3;
  o.trials = 10'000;
  o.seed = 20240601;
  o.workers = workers;
  std::ostringstream out;
  vcbound::cli::run_simulate(o, "acceptance", out);
  return out.str();
}

Outcome monte_carlo() {
  vcb_mc_config cfg{1'000'000, 12345, 1, 0.999};
  vcb_mc_estimate one{};
  vcb_mc_estimate many{};
  CALL(vcb_estimate_single_tail(0.5, 20, 0.1, &cfg, &one));
  cfg.worker_count = 8;
  CALL(vcb_estimate_single_tail(0.5, 20, 0.1, &cfg, &many));
  const double exact = tail(20, 0.5, 0.1);
  const bool covered = one.ci_low <= exact && exact <= one.ci_high;
  const bool single_repro = std::memcmp(&one, &many, sizeof one) == 0;

  auto strip = [](const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    j["manifest"].erase("runtime");
    return j.dump();
  };
  const std::string j1 = simulate_json(1);
  const std::string j8 = simulate_json(8);
  const auto parsed = nlohmann::json::parse(j1);
  bool all_pass = true;
  for (const auto& v : parsed["verdicts"]) all_pass = all_pass && v["verdict"] == "PASS";
  const bool bn_repro = strip(j1) == strip(j8);
  const auto& est = parsed["estimate"];

  return {covered && single_repro && all_pass && bn_repro,
          fmt("single tail: %llu/%llu, CI [%.5f, %.5f] %s exact %.5f, workers 1 vs 8 %s; "
              "B_n intervals n=50 eps=0.3: p_hat %.4f, CI_low %.5f, verdicts %s, workers 1 vs 8 %s",
              static_cast<unsigned long long>(one.successes),
              static_cast<unsigned long long>(one.trials), one.ci_low, one.ci_high,
              covered ? "contains" : "MISSES", exact, single_repro ? "identical" : "DIFFER",
              est["p_hat"].get<double>(), est["ci_low"].get<double>(), all_pass ? "PASS" : "VIOLATION",
              bn_repro ? "identical" : "DIFFER")};
}

Outcome crossover() {
  auto windows = [] {
    vcb_window_set* set = nullptr;
    CALL(vcb_crossover_window(100, kC, VCB_VARIANT_PAPER, &set));
    std::vector<vcb_window> w(vcb_window_set_size(set));
    for (std::size_t i = 0; i < w.size(); ++i) vcb_window_set_get(set, i, &w[i]);
    vcb_window_set_free(set);
    return w;
  };
  const auto w = windows();
  if (w.size() != 1) return {false, fmt("expected one window, found %zu", w.size())};
  const double lo = w[0].lower.epsilon;
  const double hi = w[0].upper.epsilon;

  auto diff = [](double eps) {
    vcb_breakdown r{};
    vcb_breakdown h{};
    CALL(vcb_refined_single_worst_case(100, eps, VCB_VARIANT_PAPER, kC, &r));
    CALL(vcb_hoeffding_single(100, eps, &h));
    return r.raw_total - h.raw_total;
  };
  auto inside = [&](double e) { return lo < e && e < hi; };
  const bool signs = diff(0.05) < 0 && diff(0.12) < 0 && diff(0.15) > 0 && diff(0.2) > 0 &&
                     inside(0.05) && inside(0.12) && !inside(0.15) && !inside(0.2);

  double drift = 0.0;
  for (int k = 0; k < 3; ++k) {
    const auto again = windows();
    if (again.size() != 1) return {false, "window count changed between reruns"};
    drift = std::max({drift, std::abs(again[0].lower.epsilon - lo), std::abs(again[0].upper.epsilon - hi)});
  }
  const double offline = std::max(std::abs(lo - oracle::kWindowPaperLow), std::abs(hi - oracle::kWindowPaperHigh));
  return {signs && drift <= 1e-9 && offline <= 1e-8,
          fmt("window (%.9f, %.9f); sign checks at 0.05, 0.12, 0.15, 0.2 %s; rerun drift %.3g; "
              "distance to offline bisection %.3g",
              lo, hi, signs ? "hold" : "FAIL", drift, offline)};
}

Outcome paper_audit() {
  const fs::path dir = VCBOUND_ARTIFACT_DIR;
  fs::create_directories(dir);
  const fs::path report = dir / "paper_variant_audit.csv";
  fs::remove(report);
  vcbound::cli::AuditOptions o;
  o.out = report.string();
  std::ostringstream summary;
  const int code = vcbound::cli::run_audit(o, "acceptance", summary);
  const bool written = fs::exists(report) && fs::exists(report.string() + ".manifest.json");
  std::string first_line = summary.str().substr(0, summary.str().find('\n'));
  if (const auto colon = first_line.find(": "); colon != std::string::npos) first_line.erase(0, colon + 2);
  return {code == 0 && written, first_line + "; report at " + report.string()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"inequality chain at p = 0.5", inequality_chain},
      {"Hoeffding validity", hoeffding_validity},
      {"Mills ratio bound", mills_lemma},
      {"normal CDF accuracy", phi_accuracy},
      {"growth-function equivalence", growth_equivalence},
      {"VC dimensions", vc_dimensions},
      {"sup-deviation exactness", sup_deviation},
      {"Monte Carlo consistency", monte_carlo},
      {"crossover window", crossover},
      {"paper-variant audit", paper_audit},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const CallFailed& e) {
      o = {false, "library call failed: " + e.what};
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

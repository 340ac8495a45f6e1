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

#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "vcbound/deviation_bounds.hpp"
#include "vcbound/errors.hpp"

using namespace vcbound;

namespace {

BoundQuery query(std::int64_t n, double eps, double m, BoundVariant v = BoundVariant::paper) {
  BoundQuery q;
  q.n = n;
  q.epsilon = eps;
  q.growth = GrowthValue::from_count(m);
  q.variant = v;
  return q;
}

std::vector<double> eps_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 20; ++i) g.push_back(0.02 * i);
  return g;
}

}  // namespace

TEST_CASE("hoeffding reference values") {
  CHECK(hoeffding_single(100, 0.1).raw_total ==
        doctest::Approx(0.27067056647322538379).epsilon(1e-14));
  const auto tiny = hoeffding_single(2000, 0.1);
  CHECK(tiny.raw_total == doctest::Approx(8.4967085105831779907e-18).epsilon(1e-12));
  CHECK(tiny.log_raw_total == doctest::Approx(-39.306852819440054691).epsilon(1e-14));
  CHECK(hoeffding_vc(query(500, 0.15, 125251)).raw_total ==
        doctest::Approx(4.2382381341093538577e-5).epsilon(1e-12));

  const auto big = hoeffding_vc(query(50, 0.2, 1276));
  CHECK(big.raw_total == doctest::Approx(46.74151044404962811).epsilon(1e-12));
  CHECK(big.clamped_total == 1.0);
  CHECK(big.be_term == 0.0);
}

TEST_CASE("refined bound reference values") {
  const auto w = refined_single_worst_case(100, 0.1, BoundVariant::paper);
  CHECK(w.normal_tail_term == doctest::Approx(0.053990966513188051951).epsilon(1e-13));
  CHECK(w.be_term == doctest::Approx(0.04748).epsilon(1e-15));
  CHECK(w.raw_total == doctest::Approx(0.10147096651318805195).epsilon(1e-13));

  const auto vc = refined_vc(query(500, 0.15, 125251));
  CHECK(vc.raw_total == doctest::Approx(2659.5423508928634967).epsilon(1e-12));
  CHECK(vc.clamped_total == 1.0);
  CHECK(vc.be_term > vc.normal_tail_term);
}

TEST_CASE("m = 1 reduces to the single-set worst case exactly") {
  for (auto v : {BoundVariant::paper, BoundVariant::two_sided, BoundVariant::moment}) {
    for (std::int64_t n : {5, 100, 1000}) {
      for (double eps : {0.05, 0.1, 0.3}) {
        const auto a = refined_vc(query(n, eps, 1.0, v));
        const auto b = refined_single_worst_case(n, eps, v);
        CHECK(a.raw_total == b.raw_total);
        CHECK(a.normal_tail_term == b.normal_tail_term);
        CHECK(a.be_term == b.be_term);
        CHECK(a.log_raw_total == b.log_raw_total);
      }
    }
  }
}

TEST_CASE("variants scale the normal-approximation error term") {
  const double c = kDefaultBerryEsseenConstant;
  CHECK(refined_single_worst_case(100, 0.1, BoundVariant::two_sided).be_term ==
        doctest::Approx(2 * c / 10));
  CHECK(refined_single_worst_case(100, 0.1, BoundVariant::moment).be_term ==
        doctest::Approx(2 * c / 10));

  SingleSetQuery q;
  q.n = 100;
  q.p = 0.2;
  q.epsilon = 0.1;
  q.variant = BoundVariant::moment;
  const double sigma = std::sqrt(0.2 * 0.8);
  const double beta3 = 0.2 * 0.8 * (0.04 + 0.64);
  CHECK(refined_single(q).be_term == doctest::Approx(2 * c * beta3 / (sigma * sigma * sigma * 10)));
  // the normal term uses the actual sigma: 2 Q(eps sqrt(n) / sigma)
  CHECK(refined_single(q).normal_tail_term ==
        doctest::Approx(std::erfc(0.1 * 10 / sigma / std::sqrt(2.0))).epsilon(1e-13));
}

TEST_CASE("third absolute moment") {
  CHECK(bernoulli_third_abs_moment(0.5) == doctest::Approx(0.125));
  CHECK(bernoulli_third_abs_moment(0.3) == doctest::Approx(0.21 * (0.09 + 0.49)));
  CHECK(bernoulli_third_abs_moment(0.0) == 0.0);
}

TEST_CASE("degenerate p gives a zero breakdown") {
  SingleSetQuery q;
  q.n = 50;
  q.p = 0.0;
  const auto b = refined_single(q);
  CHECK(b.raw_total == 0.0);
  CHECK(b.clamped_total == 0.0);
  q.p = 1.0;
  CHECK(refined_single(q).raw_total == 0.0);
}

TEST_CASE("exact binomial tail") {
  CHECK(exact_binomial_tail(20, 0.5, 0.1) == doctest::Approx(0.26317596435546875).epsilon(1e-15));
  CHECK(exact_binomial_tail(100, 0.5, 0.1) ==
        doctest::Approx(0.035200200217704815953).epsilon(1e-13));
  CHECK(exact_binomial_tail(30, 0.0, 0.1) == 0.0);
  CHECK(exact_binomial_tail(30, 1.0, 0.1) == 0.0);

  for (std::int64_t n : {1, 7, 40, 133, 200, 1000}) {
    for (double p : {0.05, 0.3, 0.5, 0.85}) {
      for (double eps : {0.02, 0.1, 0.25, 0.4}) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(eps);
        CHECK(std::abs(exact_binomial_tail(n, p, eps) - oracle::binomial_tail(n, p, eps)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("strict exceedance with tie tolerance") {
  CHECK_FALSE(exceeds(0.1, 0.1));
  CHECK_FALSE(exceeds(0.7 - 0.4, 0.3));
  CHECK(exceeds(0.1000001, 0.1));
  CHECK_FALSE(exceeds(0.05, 0.1));
}

TEST_CASE("bounds are nonincreasing in epsilon") {
  for (std::int64_t n : {10, 100, 500}) {
    double prev_h = 2.0;
    double prev_r = 1e300;
    for (double eps : eps_grid()) {
      const double h = hoeffding_single(n, eps).raw_total;
      const double r = refined_single_worst_case(n, eps, BoundVariant::paper).raw_total;
      CHECK(h <= prev_h);
      CHECK(r <= prev_r);
      prev_h = h;
      prev_r = r;
    }
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(hoeffding_single(0, 0.1), DomainError);
  CHECK_THROWS_AS(hoeffding_single(10, 0.0), DomainError);
  CHECK_THROWS_AS(hoeffding_single(10, 1.0), DomainError);
  CHECK_THROWS_AS(refined_single_worst_case(10, 0.1, BoundVariant::paper, 0.0), DomainError);
  CHECK_THROWS_AS(GrowthValue::from_count(0.5), DomainError);
  CHECK_THROWS_AS(exact_binomial_tail(10, 1.5, 0.1), DomainError);
  CHECK_THROWS_AS(parse_variant("flat"), DomainError);
  CHECK(parse_variant("two-sided") == BoundVariant::two_sided);
  CHECK(to_string(BoundVariant::moment) == "moment");
}

TEST_CASE("crossover window at n = 100") {
  const auto w = crossover_window(100);
  REQUIRE(w.size() == 1);
  CHECK(w[0].lower.epsilon == doctest::Approx(oracle::kWindowPaperLow).epsilon(1e-8));
  CHECK(w[0].upper.epsilon == doctest::Approx(oracle::kWindowPaperHigh).epsilon(1e-8));
  CHECK(w[0].lower.diff_below >= 0.0);
  CHECK(w[0].lower.diff_above < 0.0);
  CHECK(w[0].upper.diff_below < 0.0);
  CHECK(w[0].upper.diff_above >= 0.0);
  CHECK_FALSE(w[0].lower.at_domain_edge);

  // direct evaluations of both sides of the window
  auto diff = [](double eps) {
    return refined_single_worst_case(100, eps, BoundVariant::paper).raw_total -
           hoeffding_single(100, eps).raw_total;
  };
  CHECK(diff(0.05) < 0.0);
  CHECK(diff(0.12) < 0.0);
  CHECK(diff(0.15) > 0.0);
  CHECK(diff(0.2) > 0.0);
  CHECK(crossover_difference(100, 0.05, kDefaultBerryEsseenConstant, BoundVariant::paper) ==
        doctest::Approx(diff(0.05)));

  const auto ts = crossover_window(100, kDefaultBerryEsseenConstant, BoundVariant::two_sided);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].lower.epsilon == doctest::Approx(0.0210384798332857).epsilon(1e-8));
  CHECK(ts[0].upper.epsilon == doctest::Approx(0.119689960114497).epsilon(1e-8));
}

TEST_CASE("crossover window is m-independent and shrinks away from fixed epsilon") {
  for (double eps : {0.05, 0.15}) {
    const double d1 = refined_vc(query(100, eps, 1.0)).raw_total - hoeffding_vc(query(100, eps, 1.0)).raw_total;
    const double d6 = refined_vc(query(100, eps, 1e6)).raw_total - hoeffding_vc(query(100, eps, 1e6)).raw_total;
    CHECK((d1 < 0) == (d6 < 0));
  }
  for (const auto& w : crossover_window(10'000)) {
    CHECK_FALSE((w.lower.epsilon < 0.3 && 0.3 < w.upper.epsilon));
  }
  // a huge constant leaves nothing for the refined bound to win
  CHECK(crossover_window(100, 50.0).empty());
}

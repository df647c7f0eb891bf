// Copyright 2026 The pkr Authors.
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
#include <random>

#include "doctest.h"
#include "pkr/error.hpp"
#include "pkr/oracle.hpp"
#include "pkr/pknorm.hpp"
#include "support/instances.hpp"

using namespace pkr;
using testing::two_point;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// For mu = dirac(x) - dirac(y) at distance d every zero-charge xi is t * mu,
// so the norm is min over t of l^p(|t| d, 2 |1 - t|). Dense scan of t in
// [0, 1] followed by golden-section refinement; independent of the solver.
double two_point_oracle(double d, double p) {
  auto obj = [&](double t) { return lp_combine(t * d, 2.0 * (1.0 - t), p); };
  double best_t = 0.0;
  for (int k = 0; k <= 10000; ++k) {
    const double t = k / 10000.0;
    if (obj(t) < obj(best_t)) best_t = t;
  }
  double lo = std::max(0.0, best_t - 1e-4), hi = std::min(1.0, best_t + 1e-4);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    (obj(m1) < obj(m2) ? hi : lo) = obj(m1) < obj(m2) ? m2 : m1;
  }
  return std::min(obj(0.5 * (lo + hi)), obj(best_t));
}

}  // namespace

TEST_CASE("HolderPair conjugates") {
  CHECK(HolderPair::from_p(1.0).q == kInf);
  CHECK(HolderPair::from_p(kInf).q == 1.0);
  CHECK(HolderPair::from_p(2.0).q == 2.0);
  CHECK(HolderPair::from_p(4.0).q == doctest::Approx(4.0 / 3.0));
  CHECK(HolderPair::from_q(1.0).p == kInf);
  CHECK_THROWS_AS(HolderPair::from_p(0.5), Error);
  CHECK_THROWS_AS(HolderPair::from_q(std::nan("")), Error);
}

TEST_CASE("lp_combine") {
  CHECK(lp_combine(3, 4, 2) == doctest::Approx(5.0));
  CHECK(lp_combine(3, 4, 1) == 7.0);
  CHECK(lp_combine(3, 4, kInf) == 4.0);
  CHECK(lp_combine(0, 0, 3) == 0.0);
  // No overflow for large exponents.
  CHECK(lp_combine(1e200, 1e200, 8) == doctest::Approx(1e200 * std::pow(2.0, 0.125)));
}

TEST_CASE("scalarized_min two-point examples") {
  const SpacePtr s = two_point(1.0);
  const SignedMeasure mu = dirac(s, 0) - dirac(s, 1);

  const auto transport = scalarized_min(mu, 1.0);
  CHECK(transport.a == 1.0);
  CHECK(transport.b == 0.0);
  CHECK(transport.objective() == 1.0);
  CHECK(transport.xi[0] == 1.0);

  const auto annihilate = scalarized_min(mu, 0.25);
  CHECK(annihilate.a == 0.0);
  CHECK(annihilate.b == 2.0);
  CHECK(annihilate.objective() == 0.5);
  CHECK(annihilate.xi.is_zero());

  const auto charged = scalarized_min(dirac(s, 0), 1.0);
  CHECK(charged.a == 0.0);
  CHECK(charged.b == 1.0);
  CHECK(charged.objective() == 1.0);

  CHECK_THROWS_AS(scalarized_min(mu, -1.0), Error);
}

TEST_CASE("property: scalarized_min is optimal and dual-certified") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const SpacePtr s = testing::random_metric(rng, 2 + trial % 8);
    const SignedMeasure mu = testing::random_measure(rng, s);
    const double lambda = testing::uniform_vector(rng, 1, 0.01, 1.5)[0];
    const auto sol = scalarized_min(mu, lambda);
    const double scale = std::max(1.0, sol.objective());
    CHECK(std::abs(total_charge(sol.xi)) <= 1e-12 * scale);
    // The potentials are feasible for the weighted dual and pair to the
    // primal objective, so no zero-charge xi can do better.
    const LipschitzFunction f(s, sol.potentials);
    CHECK(lip_const(f) <= 1.0 + 1e-9);
    CHECK(sup_norm(f) <= lambda + 1e-9);
    CHECK(pairing(f, mu) == doctest::Approx(sol.objective()).epsilon(1e-9));
    for (int k = 0; k < 5; ++k) {
      const SignedMeasure other = testing::random_zero_charge(rng, s);
      const double a = kr_norm(other).cost;
      const double b = tv_norm(mu - other);
      CHECK(sol.objective() <= a + lambda * b + 1e-9 * scale);
    }
  }
}

TEST_CASE("pareto_frontier examples") {
  const SpacePtr s = two_point(1.0);
  const auto fr = pareto_frontier(dirac(s, 0) - dirac(s, 1), 16);
  REQUIRE(fr.size() == 2);
  CHECK(fr[0].lambda == 0.0);
  CHECK(fr[0].a == 0.0);
  CHECK(fr[0].b == 2.0);
  CHECK(fr[1].lambda == 0.5);
  CHECK(fr[1].a == 1.0);
  CHECK(fr[1].b == 0.0);

  const auto zero = pareto_frontier(SignedMeasure::zero(s), 16);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].a == 0.0);
  CHECK(zero[0].b == 0.0);

  const auto charged = pareto_frontier(dirac(s, 0), 16);
  REQUIRE(charged.size() == 1);
  CHECK(charged[0].a == 0.0);
  CHECK(charged[0].b == 1.0);

  CHECK_THROWS_AS(pareto_frontier(dirac(s, 0), 1), Error);
}

TEST_CASE("property: frontier is monotone and respects the cap") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const SpacePtr s = testing::random_metric(rng, 3 + trial % 9);
    const SignedMeasure mu = testing::random_measure(rng, s);
    const auto fr = pareto_frontier(mu, 64);
    REQUIRE(!fr.empty());
    CHECK(fr.front().a == 0.0);
    CHECK(fr.front().b == doctest::Approx(tv_norm(mu)));
    CHECK(fr.back().b == doctest::Approx(std::abs(total_charge(mu))).epsilon(1e-9));
    for (std::size_t k = 1; k < fr.size(); ++k) {
      CHECK(fr[k].lambda > fr[k - 1].lambda);
      CHECK(fr[k].a >= fr[k - 1].a);
      CHECK(fr[k].b <= fr[k - 1].b);
      CHECK(fr[k].lambda <= 0.5 * s->diameter() + 1e-12);
    }
    CHECK(pareto_frontier(mu, 3).size() <= 3);
  }
}

TEST_CASE("pk_norm two-point closed forms") {
  for (double d : {1.0, 3.0}) {
    const SpacePtr s = two_point(d);
    const SignedMeasure mu = dirac(s, 0) - dirac(s, 1);
    const double want_1 = std::min(d, 2.0);
    const double want_inf = 2.0 * d / (2.0 + d);
    const double want_2 = 2.0 * d / std::sqrt(d * d + 4.0);
    CHECK(two_point_oracle(d, 1.0) == doctest::Approx(want_1).epsilon(1e-9));
    CHECK(two_point_oracle(d, kInf) == doctest::Approx(want_inf).epsilon(1e-9));
    CHECK(two_point_oracle(d, 2.0) == doctest::Approx(want_2).epsilon(1e-9));
    CHECK(pk_norm(mu, 1.0).value == doctest::Approx(want_1).epsilon(1e-12));
    CHECK(pk_norm(mu, kInf).value == doctest::Approx(want_inf).epsilon(1e-12));
    CHECK(pk_norm(mu, 2.0).value == doctest::Approx(want_2).epsilon(1e-12));
  }

  const SpacePtr s1 = two_point(1.0);
  const auto fm = pk_norm(dirac(s1, 0) - dirac(s1, 1), kInf);
  CHECK(fm.xi[0] == doctest::Approx(2.0 / 3.0));
  CHECK(fm.xi[1] == doctest::Approx(-2.0 / 3.0));

  const SpacePtr s3 = two_point(3.0);
  const auto flat = pk_norm(dirac(s3, 0) - dirac(s3, 1), 1.0);
  CHECK(flat.value == 2.0);
  CHECK(flat.xi.is_zero());
}

TEST_CASE("pk_norm of a dirac is one for every p") {
  std::mt19937_64 rng(37);
  const SpacePtr s = testing::random_metric(rng, 5);
  for (double p : testing::standard_ps()) {
    const auto sol = pk_norm(dirac(s, 2), p);
    CHECK(sol.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.xi.is_zero());
    CHECK(sol.gap <= 1e-12);
  }
}

TEST_CASE("pk_norm zero measure short-circuits") {
  const SpacePtr s = testing::line3();
  const auto sol = pk_norm(SignedMeasure::zero(s), 2.0);
  CHECK(sol.value == 0.0);
  CHECK(sol.gap == 0.0);
  CHECK(sol.plan.entries.empty());
  CHECK(sol.frontier.size() == 1);
}

TEST_CASE("pk_norm rejects p < 1 and bad tolerances") {
  const SpacePtr s = two_point(1.0);
  try {
    pk_norm(dirac(s, 0), 0.5);
    FAIL("expected InvalidP");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidP);
  }
  CHECK_THROWS_AS(pk_norm(dirac(s, 0), 2.0, 0.0), Error);
}

TEST_CASE("pk_dist") {
  const SpacePtr s = two_point(1.0);
  const SignedMeasure dx = dirac(s, 0), dy = dirac(s, 1);
  CHECK(pk_dist(dx, dx, 2.0).value == 0.0);
  CHECK(pk_dist(dx, dy, kInf).value == doctest::Approx(2.0 / 3.0));
  CHECK(pk_dist(dx, dy, 1.0).value == doctest::Approx(1.0));
  const SpacePtr other = two_point(1.0);
  CHECK_THROWS_AS(pk_dist(dx, dirac(other, 0), 1.0), Error);
}

TEST_CASE("property: pk_norm solutions are consistent and bounded") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const SpacePtr s = testing::random_metric(rng, 2 + trial % 10);
    const SignedMeasure mu = testing::random_measure(rng, s);
    double previous = kInf;
    for (double p : testing::standard_ps()) {
      const auto sol = pk_norm(mu, p);
      const double scale = std::max(1.0, sol.value);
      CHECK(sol.value == doctest::Approx(lp_combine(sol.a, sol.b, p)));
      CHECK(sol.a == doctest::Approx(plan_cost(sol.plan)));
      CHECK(sol.b == doctest::Approx(tv_norm(mu - sol.xi)));
      CHECK(std::abs(total_charge(sol.xi)) <= 1e-9 * scale);
      CHECK(sol.gap >= -1e-9);
      CHECK(sol.gap <= 1e-8 * scale);
      CHECK(ql_norm(sol.dual_f, sol.exponents.q) <= 1.0 + 1e-9);
      CHECK(sol.value <= tv_norm(mu) + 1e-9);
      CHECK(sol.value <= previous + 1e-9);
      previous = sol.value;
    }
  }
}

TEST_CASE("property: pk_norm is a norm") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const SpacePtr s = testing::random_metric(rng, 2 + trial % 8);
    const SignedMeasure mu = testing::random_measure(rng, s);
    const SignedMeasure nu = testing::random_measure(rng, s);
    const double c = testing::uniform_vector(rng, 1, -4, 4)[0];
    for (double p : {1.0, 2.0, kInf}) {
      const double m = pk_norm(mu, p).value;
      CHECK(m > 0.0);
      CHECK(pk_norm(c * mu, p).value == doctest::Approx(std::abs(c) * m).epsilon(1e-9));
      CHECK(pk_norm(mu + nu, p).value <= m + pk_norm(nu, p).value + 1e-9);
    }
  }
}

TEST_CASE("property: zero-charge measures are bounded by their KR norm") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const SpacePtr s = testing::random_metric(rng, 2 + trial % 8);
    const SignedMeasure xi = testing::random_zero_charge(rng, s);
    const double kr = kr_norm(xi).cost;
    for (double p : testing::standard_ps()) {
      CHECK(pk_norm(xi, p).value <= kr + 1e-9);
    }
    for (std::size_t i = 0; i + 1 < s->size(); ++i) {
      const SignedMeasure pair = dirac(s, i) - dirac(s, i + 1);
      CHECK(pk_norm(pair, 2.0).value <= s->distance(i, i + 1) + 1e-9);
    }
  }
}

TEST_CASE("pk_norm matches the grid oracle on small spaces") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const SpacePtr s = testing::random_metric(rng, 2 + trial % 2);
    const SignedMeasure mu = testing::random_measure(rng, s);
    for (double p : {1.0, 2.0, kInf}) {
      CHECK(pk_norm(mu, p).value ==
            doctest::Approx(oracle::oracle_pk(mu, p, 100)).epsilon(1e-3));
    }
  }
}

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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "pkr/error.hpp"
#include "pkr/network_simplex.hpp"

using namespace pkr;

namespace {

// Checks primal feasibility, dual feasibility and complementary slackness.
void check_optimal(const flow::Problem& pb, const flow::Solution& sol) {
  std::vector<double> net(pb.num_nodes, 0.0);
  double scale = 1.0, cost = 0.0;
  for (double s : pb.supply) scale += std::abs(s);
  for (std::size_t e = 0; e < pb.arcs.size(); ++e) {
    const auto& a = pb.arcs[e];
    CHECK(sol.flow[e] >= 0.0);
    net[a.from] += sol.flow[e];
    net[a.to] -= sol.flow[e];
    cost += sol.flow[e] * a.cost;
    const double rc = a.cost - (sol.potential[a.to] - sol.potential[a.from]);
    CHECK(rc >= -1e-9);
    if (sol.flow[e] > 1e-12) CHECK(std::abs(rc) <= 1e-9);
  }
  for (int k = 0; k < pb.num_nodes; ++k) {
    CHECK(net[k] == doctest::Approx(pb.supply[k]).epsilon(1e-12).scale(scale));
  }
  CHECK(sol.cost == doctest::Approx(cost));
  double dual = 0.0;
  for (int k = 0; k < pb.num_nodes; ++k) dual -= sol.potential[k] * pb.supply[k];
  CHECK(dual == doctest::Approx(sol.cost).epsilon(1e-10));
}

flow::Problem assignment(const std::vector<std::vector<double>>& c) {
  const int n = static_cast<int>(c.size());
  flow::Problem pb;
  pb.num_nodes = 2 * n;
  for (int i = 0; i < n; ++i) {
    pb.supply.push_back(1.0);
    for (int j = 0; j < n; ++j) pb.arcs.push_back({i, n + j, c[i][j]});
  }
  for (int j = 0; j < n; ++j) pb.supply.push_back(-1.0);
  return pb;
}

}  // namespace

TEST_CASE("single arc") {
  flow::Problem pb{2, {{0, 1, 3.0}}, {2.0, -2.0}};
  const auto sol = flow::solve(pb);
  CHECK(sol.flow[0] == 2.0);
  CHECK(sol.cost == 6.0);
  CHECK(sol.potential[0] == 0.0);
  CHECK(sol.potential[1] == 3.0);
}

TEST_CASE("transshipment picks the cheaper route") {
  // 0 -> 2 directly costs 5, via 1 costs 1 + 1.
  flow::Problem pb{3, {{0, 2, 5.0}, {0, 1, 1.0}, {1, 2, 1.0}}, {1.0, 0.0, -1.0}};
  const auto sol = flow::solve(pb);
  CHECK(sol.cost == 2.0);
  CHECK(sol.flow[0] == 0.0);
  check_optimal(pb, sol);
}

TEST_CASE("assignment matches permutation brute force") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> cost(0, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<std::vector<double>> c(n, std::vector<double>(n));
    for (auto& row : c) for (double& x : row) x = cost(rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += c[i][perm[i]];
      best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto pb = assignment(c);
    const auto sol = flow::solve(pb);
    CHECK(sol.cost == best);
    check_optimal(pb, sol);
  }
}

TEST_CASE("heavily degenerate instances terminate and are deterministic") {
  // All-equal costs and unit supplies: every basis is degenerate.
  std::vector<std::vector<double>> c(6, std::vector<double>(6, 1.0));
  const auto pb = assignment(c);
  const auto first = flow::solve(pb);
  const auto second = flow::solve(pb);
  CHECK(first.cost == 6.0);
  CHECK(first.flow == second.flow);
  CHECK(first.potential == second.potential);
  check_optimal(pb, first);
}

TEST_CASE("random real-valued transshipment on complete graphs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 10;
    flow::Problem pb;
    pb.num_nodes = n;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      pb.supply.push_back(unif(rng) - 0.5);
      total += pb.supply.back();
      for (int j = 0; j < n; ++j) {
        if (i != j) pb.arcs.push_back({i, j, 0.1 + unif(rng)});
      }
    }
    pb.supply.back() -= total;
    check_optimal(pb, flow::solve(pb));
  }
}

TEST_CASE("failures are reported as NumericalFailure") {
  flow::Problem disconnected{2, {}, {1.0, -1.0}};
  try {
    flow::solve(disconnected);
    FAIL("expected NumericalFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNumericalFailure);
  }

  std::vector<std::vector<double>> c = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  flow::Options capped;
  capped.max_pivots = 1;
  try {
    flow::solve(assignment(c), capped);
    FAIL("expected NumericalFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNumericalFailure);
  }
}

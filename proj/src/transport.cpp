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

#include "pkr/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pkr/error.hpp"
#include "pkr/network_simplex.hpp"

namespace pkr {

double plan_cost(const TransportPlan& plan) {
  double cost = 0.0;
  for (const auto& e : plan.entries) {
    cost += e.mass * plan.space->distance(e.from, e.to);
  }
  return cost;
}

SignedMeasure plan_divergence(const TransportPlan& plan) {
  std::vector<double> w(plan.space->size(), 0.0);
  for (const auto& e : plan.entries) {
    w[e.to] += e.mass;
    w[e.from] -= e.mass;
  }
  return SignedMeasure(plan.space, std::move(w));
}

TransportPlan normalize_plan(SpacePtr space, std::vector<PlanEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  std::vector<PlanEntry> merged;
  for (const auto& e : entries) {
    if (e.from >= space->size() || e.to >= space->size()) {
      throw Error(ErrorKind::kIndexOutOfRange, "plan entry index out of range");
    }
    if (!merged.empty() && merged.back().from == e.from &&
        merged.back().to == e.to) {
      merged.back().mass += e.mass;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const PlanEntry& e) {
    return !(e.mass > 0.0) || e.from == e.to;
  });
  return TransportPlan{std::move(space), std::move(merged)};
}

FlowResult kr_norm(const SignedMeasure& xi) {
  const SpacePtr& space = xi.space();
  const std::size_t n = space->size();
  const double tv = tv_norm(xi);
  const double charge = total_charge(xi);
  if (std::abs(charge) > 1e-9 * std::max(1.0, tv)) {
    std::ostringstream msg;
    msg << "total charge " << charge << " is not zero";
    throw Error(ErrorKind::kNonZeroCharge, msg.str());
  }

  FlowResult result;
  result.plan.space = space;
  result.potentials.assign(n, 0.0);
  const std::vector<std::size_t> nodes = support(xi);
  if (nodes.empty()) return result;

  // Transshipment on the complete graph over the support. With a metric cost
  // this has the same optimum as the bipartite problem from the negative to
  // the positive part, and its dual is 1-Lipschitz on every support pair.
  flow::Problem problem;
  problem.num_nodes = static_cast<int>(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    problem.supply.push_back(-xi[nodes[a]]);
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (a == b) continue;
      problem.arcs.push_back({static_cast<int>(a), static_cast<int>(b),
                              space->distance(nodes[a], nodes[b])});
    }
  }
  const flow::Solution sol = flow::solve(problem);

  std::vector<PlanEntry> entries;
  for (std::size_t e = 0; e < problem.arcs.size(); ++e) {
    if (sol.flow[e] > 0.0) {
      entries.push_back({nodes[problem.arcs[e].from],
                         nodes[problem.arcs[e].to], sol.flow[e]});
    }
  }
  result.plan = normalize_plan(space, std::move(entries));
  result.cost = plan_cost(result.plan);

  // McShane extension off the support keeps the prices 1-Lipschitz.
  std::vector<bool> on_support(n, false);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    on_support[nodes[a]] = true;
    result.potentials[nodes[a]] = sol.potential[a];
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (on_support[k]) continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      best = std::min(best, sol.potential[a] + space->distance(nodes[a], k));
    }
    result.potentials[k] = best;
  }
  return result;
}

}  // namespace pkr

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

#include "pkr/network_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pkr/error.hpp"

namespace pkr::flow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class SpanningTree {
 public:
  SpanningTree(const Problem& problem, const std::vector<Arc>& arcs)
      : num_nodes_(problem.num_nodes),
        root_(problem.num_nodes),
        arcs_(arcs),
        supply_(problem.supply),
        parent_(num_nodes_ + 1, -1),
        pred_(num_nodes_ + 1, -1),
        up_(num_nodes_ + 1, false),
        depth_(num_nodes_ + 1, 0),
        potential_(num_nodes_ + 1, 0.0),
        flow_(arcs.size(), 0.0),
        in_tree_(arcs.size(), false) {
    const int first_artificial = static_cast<int>(arcs.size()) - num_nodes_;
    for (int k = 0; k < num_nodes_; ++k) {
      parent_[k] = root_;
      pred_[k] = first_artificial + k;
      // Positive supply drains towards the root; zero-flow arcs point away
      // from it (strong feasibility).
      up_[k] = supply_[k] > 0.0;
      in_tree_[first_artificial + k] = true;
    }
    double scale = 0.0;
    for (double s : supply_) scale += std::abs(s);
    flow_eps_ = 1e-14 * std::max(scale, 1e-300);
  }

  // Rebuilds depth, potentials and tree flows from the parent structure.
  void refresh() {
    std::vector<std::vector<int>> children(num_nodes_ + 1);
    for (int k = 0; k < num_nodes_; ++k) children[parent_[k]].push_back(k);
    order_.clear();
    order_.push_back(root_);
    depth_[root_] = 0;
    potential_[root_] = 0.0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const int u = order_[head];
      for (int w : children[u]) {
        depth_[w] = depth_[u] + 1;
        const double c = arcs_[pred_[w]].cost;
        potential_[w] = up_[w] ? potential_[u] - c : potential_[u] + c;
        order_.push_back(w);
      }
    }
    if (order_.size() != static_cast<std::size_t>(num_nodes_ + 1)) {
      throw Error(ErrorKind::kNumericalFailure, "spanning tree is disconnected");
    }
    std::vector<double> subtree(num_nodes_ + 1, 0.0);
    for (int k = 0; k < num_nodes_; ++k) subtree[k] = supply_[k];
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const int w = *it;
      if (w == root_) continue;
      double f = up_[w] ? subtree[w] : -subtree[w];
      if (std::abs(f) <= flow_eps_) f = 0.0;
      if (f < 0.0) {
        throw Error(ErrorKind::kNumericalFailure,
                    "negative tree flow " + std::to_string(f));
      }
      flow_[pred_[w]] = f;
      subtree[parent_[w]] += subtree[w];
    }
  }

  double reduced_cost(int e) const {
    const Arc& a = arcs_[e];
    return a.cost - (potential_[a.to] - potential_[a.from]);
  }

  void pivot(int entering) {
    const int first = arcs_[entering].from;
    const int second = arcs_[entering].to;
    int apex_u = first, apex_v = second;
    while (apex_u != apex_v) {
      if (depth_[apex_u] >= depth_[apex_v]) {
        apex_u = parent_[apex_u];
      } else {
        apex_v = parent_[apex_v];
      }
    }
    const int apex = apex_u;

    double delta = kInf;
    int u_out = -1;
    int side = 0;
    for (int u = first; u != apex; u = parent_[u]) {
      const double d = up_[u] ? flow_[pred_[u]] : kInf;
      if (d < delta) {
        delta = d;
        u_out = u;
        side = 1;
      }
    }
    for (int u = second; u != apex; u = parent_[u]) {
      const double d = up_[u] ? kInf : flow_[pred_[u]];
      if (d <= delta) {
        delta = d;
        u_out = u;
        side = 2;
      }
    }
    if (u_out < 0 || delta == kInf) {
      throw Error(ErrorKind::kNumericalFailure, "unbounded cycle");
    }

    in_tree_[pred_[u_out]] = false;
    in_tree_[entering] = true;
    // Hang the cut-off subtree below the other endpoint of the entering arc,
    // reversing the path between the new subtree root and u_out.
    const int hang = side == 1 ? first : second;
    const int anchor = side == 1 ? second : first;
    int node = hang;
    int new_parent = anchor;
    int new_pred = entering;
    bool new_up = side == 1;
    while (true) {
      const int old_parent = parent_[node];
      const int old_pred = pred_[node];
      const bool old_up = up_[node];
      parent_[node] = new_parent;
      pred_[node] = new_pred;
      up_[node] = new_up;
      if (node == u_out) break;
      new_parent = node;
      new_pred = old_pred;
      new_up = !old_up;
      node = old_parent;
    }
  }

  bool in_tree(int e) const { return in_tree_[e]; }
  double flow(int e) const { return flow_[e]; }
  double potential(int k) const { return potential_[k]; }

 private:
  int num_nodes_;
  int root_;
  const std::vector<Arc>& arcs_;
  const std::vector<double>& supply_;
  std::vector<int> parent_;
  std::vector<int> pred_;
  std::vector<bool> up_;
  std::vector<int> depth_;
  std::vector<double> potential_;
  std::vector<double> flow_;
  std::vector<bool> in_tree_;
  std::vector<int> order_;
  double flow_eps_;
};

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
  const int n = problem.num_nodes;
  if (n < 0 || problem.supply.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::kDimensionMismatch, "supply size != node count");
  }
  double max_cost = 0.0;
  for (const Arc& a : problem.arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw Error(ErrorKind::kIndexOutOfRange, "arc endpoint out of range");
    }
    if (!std::isfinite(a.cost)) {
      throw Error(ErrorKind::kNonFiniteValue, "arc cost is not finite");
    }
    max_cost = std::max(max_cost, std::abs(a.cost));
  }
  const int m = static_cast<int>(problem.arcs.size());

  std::vector<Arc> arcs = problem.arcs;
  const double artificial_cost = (max_cost + 1.0) * (n + 1);
  for (int k = 0; k < n; ++k) {
    if (problem.supply[k] > 0.0) {
      arcs.push_back({k, n, artificial_cost});
    } else {
      arcs.push_back({n, k, artificial_cost});
    }
  }
  const double cost_eps =
      1e-12 * std::max(max_cost, 1e-300) + 4e-16 * artificial_cost;

  SpanningTree tree(problem, arcs);
  const long max_pivots =
      options.max_pivots > 0 ? options.max_pivots : 64L * (m + n) + 1000;

  Solution sol;
  while (true) {
    tree.refresh();
    int entering = -1;
    double best = -cost_eps;
    for (int e = 0; e < m; ++e) {
      if (tree.in_tree(e)) continue;
      const double rc = tree.reduced_cost(e);
      if (rc < best) {
        best = rc;
        entering = e;
      }
    }
    if (entering < 0) break;
    if (sol.pivots >= max_pivots) {
      throw Error(ErrorKind::kNumericalFailure,
                  "pivot limit " + std::to_string(max_pivots) + " exceeded");
    }
    tree.pivot(entering);
    ++sol.pivots;
  }

  double scale = 0.0;
  for (double s : problem.supply) scale += std::abs(s);
  for (int k = 0; k < n; ++k) {
    const int e = m + k;
    if (tree.in_tree(e) && tree.flow(e) > 1e-9 * std::max(1.0, scale)) {
      throw Error(ErrorKind::kNumericalFailure,
                  "infeasible: supplies cannot be routed");
    }
  }

  sol.flow.assign(m, 0.0);
  for (int e = 0; e < m; ++e) {
    if (tree.in_tree(e)) sol.flow[e] = tree.flow(e);
    sol.cost += sol.flow[e] * problem.arcs[e].cost;
  }
  sol.potential.resize(n);
  const double shift = n > 0 ? tree.potential(0) : 0.0;
  for (int k = 0; k < n; ++k) sol.potential[k] = tree.potential(k) - shift;
  return sol;
}

}  // namespace pkr::flow

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

#ifndef PKR_NETWORK_SIMPLEX_HPP_
#define PKR_NETWORK_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

namespace pkr::flow {

struct Arc {
  int from;
  int to;
  double cost;
};

// Uncapacitated transshipment problem:
//   minimize  sum_e cost_e * x_e
//   s.t.      outflow(k) - inflow(k) = supply[k],  x >= 0.
// A small imbalance in the supplies (rounding) is absorbed by the artificial
// root and does not show up in the returned arc flows.
struct Problem {
  int num_nodes = 0;
  std::vector<Arc> arcs;
  std::vector<double> supply;
};

struct Solution {
  std::vector<double> flow;  // one entry per arc in Problem::arcs
  // Node prices with potential[to] - potential[from] <= cost on every arc and
  // equality on basic arcs; normalized so that potential[0] == 0.
  std::vector<double> potential;
  double cost = 0.0;
  long pivots = 0;
};

struct Options {
  // Zero means 64 * (arcs + nodes) + 1000.
  long max_pivots = 0;
};

// Primal network simplex over a strongly feasible spanning tree rooted at an
// artificial node. Entering arc: most negative reduced cost, lowest index on
// ties. Leaving arc: last blocking arc met when the cycle is traversed from
// the apex in the direction of the entering arc, which rules out cycling on
// degenerate pivots. Deterministic for fixed input.
//
// Throws pkr::Error(NumericalFailure) when the pivot cap is hit or when the
// problem is infeasible (flow left on artificial arcs).
Solution solve(const Problem& problem, const Options& options = {});

}  // namespace pkr::flow

#endif  // PKR_NETWORK_SIMPLEX_HPP_

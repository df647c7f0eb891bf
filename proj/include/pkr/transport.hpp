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

#ifndef PKR_TRANSPORT_HPP_
#define PKR_TRANSPORT_HPP_

#include <cstddef>
#include <vector>

#include "pkr/space.hpp"

namespace pkr {

// Orientation: an entry moves mass from `from` to `to`; divergence counts
// incoming minus outgoing mass, so the entry adds +mass at `to` and -mass at
// `from`.
struct PlanEntry {
  std::size_t from;
  std::size_t to;
  double mass;

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

struct TransportPlan {
  SpacePtr space;
  std::vector<PlanEntry> entries;  // sorted by (from, to), masses > 0
};

struct FlowResult {
  double cost = 0.0;
  TransportPlan plan;
  // 1-Lipschitz prices with potentials[to] - potentials[from] == d(from, to)
  // on every plan entry; zero at the lowest-index support point.
  std::vector<double> potentials;
};

double plan_cost(const TransportPlan& plan);
SignedMeasure plan_divergence(const TransportPlan& plan);

// Sorts entries, merges duplicates and drops non-positive masses.
TransportPlan normalize_plan(SpacePtr space, std::vector<PlanEntry> entries);

// Kantorovich-Rubinstein norm of a zero-charge measure, with an optimal plan
// and dual prices. Throws NonZeroCharge when |charge| > 1e-9 * max(1, TV).
FlowResult kr_norm(const SignedMeasure& xi);

}  // namespace pkr

#endif  // PKR_TRANSPORT_HPP_

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

#ifndef PKR_ORACLE_HPP_
#define PKR_ORACLE_HPP_

// Brute-force reference solvers for desk-scale instances. They share only
// the data model with the main library and never call its solvers.

#include <cstdint>
#include <vector>

#include "pkr/space.hpp"

namespace pkr::oracle {

// Weights numerators[i] / denominator, 0 < denominator <= 100.
struct RationalMeasure {
  SpacePtr space;
  std::vector<long long> numerators;
  long long denominator = 1;

  SignedMeasure to_measure() const;
};

inline constexpr long long kMaxAtoms = 8;

// Exact KR norm by enumerating every matching between the unit atoms of the
// negative and positive parts. Throws TooManyAtoms, NonZeroCharge,
// InvalidArgument.
double oracle_kr(const RationalMeasure& xi);

// Grid search over zero-charge xi in the box |xi_i| <= 2 TV(mu), refined by
// pattern search; n <= 3. Throws TooLarge, InvalidArgument.
double oracle_pk(const SignedMeasure& mu, double p, int grid_steps);

// Best |pairing| over seeded random functions scaled to unit q-Lipschitz
// norm: a lower bound on the pK norm. Throws InvalidArgument for
// samples < 1000.
double oracle_dual(const SignedMeasure& mu, double q, int samples,
                   std::uint64_t seed);

}  // namespace pkr::oracle

#endif  // PKR_ORACLE_HPP_

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

#ifndef PKR_LIPSCHITZ_HPP_
#define PKR_LIPSCHITZ_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "pkr/space.hpp"

namespace pkr {

// Real values over the points of one space.
class LipschitzFunction {
 public:
  LipschitzFunction(SpacePtr space, std::vector<double> values);
  static LipschitzFunction zero(SpacePtr space);
  static LipschitzFunction constant(SpacePtr space, double value);

  const SpacePtr& space() const noexcept { return space_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  LipschitzFunction& operator*=(double factor);
  friend LipschitzFunction operator*(double factor, LipschitzFunction f) {
    return f *= factor;
  }

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

// max_{i != j} |f_i - f_j| / d(i, j); zero on a singleton space.
double lip_const(const LipschitzFunction& f);
double sup_norm(const LipschitzFunction& f);
// (lip^q + sup^q)^(1/q), max(lip, sup) for q = inf. Throws InvalidQ for q < 1.
double ql_norm(const LipschitzFunction& f, double q);

// sum_i f_i * mu_i. Throws SpaceMismatch.
double pairing(const LipschitzFunction& f, const SignedMeasure& mu);

// Pointwise product. Throws SpaceMismatch.
LipschitzFunction lip_product(const LipschitzFunction& f,
                              const LipschitzFunction& g);

struct DualSolution {
  LipschitzFunction f;
  double value = 0.0;  // pairing(f, mu) as evaluated
  double q = 1.0;
  // Budget (s, m) with s >= lip_const(f), m >= sup_norm(f), l^q(s, m) <= 1.
  double budget_lipschitz = 0.0;
  double budget_sup = 0.0;
};

// Maximizes pairing(f, mu) over ||f||_qL <= 1 by a golden-section search over
// budgets (s, m) on the unit l^q sphere; each budget is evaluated with one
// scalarized flow at lambda = m / s. Throws InvalidQ, ToleranceNotMet.
DualSolution dual_solve(const SignedMeasure& mu, double q, double tol = 1e-8);

}  // namespace pkr

#endif  // PKR_LIPSCHITZ_HPP_

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

#ifndef PKR_PKNORM_HPP_
#define PKR_PKNORM_HPP_

#include <cstddef>
#include <limits>
#include <vector>

#include "pkr/error.hpp"
#include "pkr/lipschitz.hpp"
#include "pkr/space.hpp"
#include "pkr/transport.hpp"

namespace pkr {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Hölder conjugate exponents, 1/p + 1/q = 1 with 1/inf = 0.
struct HolderPair {
  double p = 1.0;
  double q = kInfinity;

  static HolderPair from_p(double p);  // throws InvalidP
  static HolderPair from_q(double q);  // throws InvalidQ
};

// (a^p + b^p)^(1/p) for a, b >= 0; max(a, b) when p is infinite.
double lp_combine(double a, double b, double p);

struct ScalarizedSolution {
  double lambda = 0.0;
  SignedMeasure xi;  // zero charge
  double a = 0.0;    // plan_cost(plan) == ||xi||_KR
  double b = 0.0;    // ||mu - xi||_TV
  TransportPlan plan;
  // Dual prices normalized against the annihilation node: lip <= 1 and
  // |f_i| <= lambda.
  std::vector<double> potentials;

  double objective() const { return a + lambda * b; }
};

// min over zero-charge xi of ||xi||_KR + lambda * ||mu - xi||_TV, as a single
// min-cost flow on the space plus one annihilation node. Throws
// NegativeLambda, NumericalFailure.
ScalarizedSolution scalarized_min(const SignedMeasure& mu, double lambda);

struct FrontierPoint {
  double lambda;  // smallest weight at which this vertex is optimal
  double a;
  double b;
};

struct FrontierVertex {
  double a;
  double b;
  SignedMeasure xi;
  TransportPlan plan;
};

// Vertices of the (KR, TV) trade-off curve ordered by increasing a, found by
// dichotomic weighted-sum probing. slopes[k] is the weight at which vertices
// k and k + 1 are both optimal.
struct Frontier {
  std::vector<FrontierVertex> vertices;
  std::vector<double> slopes;

  std::vector<FrontierPoint> points() const;
};

Frontier trace_frontier(const SignedMeasure& mu, std::size_t max_points);

// Smallest l^p combination of (a, b) along the piecewise-linear frontier.
double lp_minimum(const Frontier& frontier, double p);

// Throws InvalidArgument when max_points < 2.
std::vector<FrontierPoint> pareto_frontier(const SignedMeasure& mu,
                                           std::size_t max_points);

struct PkSolution {
  HolderPair exponents;
  double value = 0.0;
  SignedMeasure xi;
  TransportPlan plan;
  double a = 0.0;
  double b = 0.0;
  std::vector<FrontierPoint> frontier;
  LipschitzFunction dual_f;
  double gap = 0.0;  // value - pairing(dual_f, mu)
};

class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(const std::string& detail, PkSolution best)
      : Error(ErrorKind::kToleranceNotMet, detail), best_(std::move(best)) {}
  const PkSolution& best() const noexcept { return best_; }

 private:
  PkSolution best_;
};

inline constexpr double kDefaultTol = 1e-8;

// ||mu||_pK with an attaining decomposition, its plan and a dual witness of
// unit q-Lipschitz norm. Throws InvalidP, ToleranceNotMet.
PkSolution pk_norm(const SignedMeasure& mu, double p, double tol = kDefaultTol);

// pk_norm(mu - nu). Throws SpaceMismatch.
PkSolution pk_dist(const SignedMeasure& mu, const SignedMeasure& nu, double p,
                   double tol = kDefaultTol);

}  // namespace pkr

#endif  // PKR_PKNORM_HPP_

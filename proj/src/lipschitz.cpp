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

#include "pkr/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pkr/error.hpp"
#include "pkr/pknorm.hpp"

namespace pkr {

LipschitzFunction::LipschitzFunction(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw Error(ErrorKind::kInvalidArgument, "null space");
  if (values_.size() != space_->size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(values_.size()) + " values for a space of " +
                    std::to_string(space_->size()) + " points");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNonFiniteValue, "function value is not finite");
    }
  }
}

LipschitzFunction LipschitzFunction::zero(SpacePtr space) {
  return constant(std::move(space), 0.0);
}

LipschitzFunction LipschitzFunction::constant(SpacePtr space, double value) {
  const std::size_t n = space ? space->size() : 0;
  return LipschitzFunction(std::move(space), std::vector<double>(n, value));
}

LipschitzFunction& LipschitzFunction::operator*=(double factor) {
  for (double& v : values_) v *= factor;
  return *this;
}

double lip_const(const LipschitzFunction& f) {
  const auto& space = *f.space();
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      best = std::max(best, std::abs(f[i] - f[j]) / space.distance(i, j));
    }
  }
  return best;
}

double sup_norm(const LipschitzFunction& f) {
  double best = 0.0;
  for (double v : f.values()) best = std::max(best, std::abs(v));
  return best;
}

double ql_norm(const LipschitzFunction& f, double q) {
  const HolderPair hp = HolderPair::from_q(q);
  return lp_combine(lip_const(f), sup_norm(f), hp.q);
}

double pairing(const LipschitzFunction& f, const SignedMeasure& mu) {
  require_same_space(f.space(), mu.space());
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * mu[i];
  return s;
}

LipschitzFunction lip_product(const LipschitzFunction& f,
                              const LipschitzFunction& g) {
  require_same_space(f.space(), g.space());
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = f[i] * g[i];
  return LipschitzFunction(f.space(), std::move(v));
}

namespace {

constexpr int kGoldenIterations = 150;
constexpr std::size_t kFrontierCap = 1u << 20;

struct Budget {
  double s;  // Lipschitz budget
  double m;  // sup budget
};

// Point of the unit l^q sphere in the closed positive quadrant, t in [0, 1].
Budget budget_at(double t, double q) {
  const double s = 1.0 - t, m = t;
  const double norm = lp_combine(s, m, q);
  return {s / norm, m / norm};
}

// Value of max{pairing : lip <= s, sup <= m} from the frontier's supporting
// lines: min_k (s a_k + m b_k).
double budget_value(const Frontier& fr, const Budget& bud) {
  double best = kInfinity;
  for (const auto& v : fr.vertices) best = std::min(best, bud.s * v.a + bud.m * v.b);
  return best;
}

LipschitzFunction witness_for_budget(const SignedMeasure& mu, const Budget& bud) {
  if (bud.s <= 1e-14 * bud.m) {
    return LipschitzFunction::constant(
        mu.space(), total_charge(mu) >= 0.0 ? bud.m : -bud.m);
  }
  ScalarizedSolution sol = scalarized_min(mu, bud.m / bud.s);
  LipschitzFunction f(mu.space(), std::move(sol.potentials));
  f *= bud.s;
  return f;
}

}  // namespace

DualSolution dual_solve(const SignedMeasure& mu, double q, double tol) {
  const HolderPair hp = HolderPair::from_q(q);
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tol must be > 0");
  }
  if (mu.is_zero()) {
    return DualSolution{LipschitzFunction::zero(mu.space()), 0.0, hp.q, 0.0, 0.0};
  }

  const Frontier frontier = trace_frontier(mu, kFrontierCap);
  Budget best_budget{1.0, 1.0};
  if (!std::isinf(hp.q)) {
    // Budget value / l^q norm is quasiconcave along the quadrant arc.
    constexpr double kInvPhi = 0.6180339887498949;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
    double h1 = budget_value(frontier, budget_at(x1, hp.q));
    double h2 = budget_value(frontier, budget_at(x2, hp.q));
    for (int it = 0; it < kGoldenIterations; ++it) {
      if (h1 < h2) {
        lo = x1;
        x1 = x2;
        h1 = h2;
        x2 = lo + kInvPhi * (hi - lo);
        h2 = budget_value(frontier, budget_at(x2, hp.q));
      } else {
        hi = x2;
        x2 = x1;
        h2 = h1;
        x1 = hi - kInvPhi * (hi - lo);
        h1 = budget_value(frontier, budget_at(x1, hp.q));
      }
    }
    double best_t = 0.5 * (lo + hi);
    double best_h = budget_value(frontier, budget_at(best_t, hp.q));
    for (double t : {0.0, 1.0}) {
      const double h = budget_value(frontier, budget_at(t, hp.q));
      if (h > best_h) {
        best_h = h;
        best_t = t;
      }
    }
    best_budget = budget_at(best_t, hp.q);
  }

  LipschitzFunction f = witness_for_budget(mu, best_budget);
  double value = pairing(f, mu);
  const double norm_f = ql_norm(f, hp.q);
  if (value > 0.0 && norm_f > 0.0) {
    f *= 1.0 / norm_f;
    value = pairing(f, mu);
  }

  const double primal = lp_minimum(frontier, hp.p);
  if (primal - value > tol * std::max(1.0, primal)) {
    std::ostringstream msg;
    msg << "dual value " << value << " is below the primal bound " << primal
        << " by more than " << tol;
    throw Error(ErrorKind::kToleranceNotMet, msg.str());
  }
  return DualSolution{f, value, hp.q, lip_const(f), sup_norm(f)};
}

}  // namespace pkr

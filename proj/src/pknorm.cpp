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

#include "pkr/pknorm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pkr/network_simplex.hpp"

namespace pkr {

HolderPair HolderPair::from_p(double p) {
  if (!(p >= 1.0)) {
    std::ostringstream msg;
    msg << "p = " << p << " is not in [1, inf]";
    throw Error(ErrorKind::kInvalidP, msg.str());
  }
  if (p == 1.0) return {1.0, kInfinity};
  if (std::isinf(p)) return {kInfinity, 1.0};
  return {p, p / (p - 1.0)};
}

HolderPair HolderPair::from_q(double q) {
  if (!(q >= 1.0)) {
    std::ostringstream msg;
    msg << "q = " << q << " is not in [1, inf]";
    throw Error(ErrorKind::kInvalidQ, msg.str());
  }
  const HolderPair swapped = from_p(q);
  return {swapped.q, swapped.p};
}

double lp_combine(double a, double b, double p) {
  a = std::abs(a);
  b = std::abs(b);
  if (std::isinf(p)) return std::max(a, b);
  if (p == 1.0) return a + b;
  const double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  const double ra = a / m, rb = b / m;
  return m * std::pow(std::pow(ra, p) + std::pow(rb, p), 1.0 / p);
}

ScalarizedSolution scalarized_min(const SignedMeasure& mu, double lambda) {
  if (!(lambda >= 0.0) || std::isinf(lambda)) {
    std::ostringstream msg;
    msg << "lambda = " << lambda << " must be finite and >= 0";
    throw Error(ErrorKind::kNegativeLambda, msg.str());
  }
  const SpacePtr& space = mu.space();
  const int n = static_cast<int>(space->size());
  const int sink = n;  // annihilation node

  flow::Problem problem;
  problem.num_nodes = n + 1;
  problem.supply.resize(n + 1);
  for (int i = 0; i < n; ++i) {
    problem.supply[i] = -mu[i];
    for (int j = 0; j < n; ++j) {
      if (i != j) problem.arcs.push_back({i, j, space->distance(i, j)});
    }
  }
  const std::size_t real_arcs = problem.arcs.size();
  for (int i = 0; i < n; ++i) {
    problem.arcs.push_back({i, sink, lambda});
    problem.arcs.push_back({sink, i, lambda});
  }
  problem.supply[sink] = total_charge(mu);

  const flow::Solution sol = flow::solve(problem);

  std::vector<PlanEntry> entries;
  for (std::size_t e = 0; e < real_arcs; ++e) {
    if (sol.flow[e] > 0.0) {
      entries.push_back({static_cast<std::size_t>(problem.arcs[e].from),
                         static_cast<std::size_t>(problem.arcs[e].to),
                         sol.flow[e]});
    }
  }
  ScalarizedSolution out{lambda,
                         SignedMeasure::zero(space),
                         0.0,
                         0.0,
                         normalize_plan(space, std::move(entries)),
                         std::vector<double>(n, 0.0)};
  out.xi = plan_divergence(out.plan);
  out.a = plan_cost(out.plan);
  out.b = tv_norm(mu - out.xi);
  for (int i = 0; i < n; ++i) {
    out.potentials[i] = sol.potential[i] - sol.potential[sink];
  }
  return out;
}

std::vector<FrontierPoint> Frontier::points() const {
  std::vector<FrontierPoint> out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    out.push_back({k == 0 ? 0.0 : slopes[k - 1], vertices[k].a, vertices[k].b});
  }
  return out;
}

namespace {

FrontierVertex to_vertex(ScalarizedSolution&& s) {
  return {s.a, s.b, std::move(s.xi), std::move(s.plan)};
}

class FrontierTracer {
 public:
  FrontierTracer(const SignedMeasure& mu, std::size_t max_points)
      : mu_(mu), max_points_(max_points) {}

  // Appends the vertices strictly between left and right, in order.
  void refine(const FrontierVertex& left, const FrontierVertex& right,
              std::vector<FrontierVertex>& out) {
    if (budget_used_ >= max_points_) return;
    const double da = right.a - left.a;
    const double db = left.b - right.b;
    if (!(da > 0.0) || !(db > 0.0)) return;
    const double lambda = da / db;
    ScalarizedSolution probe = scalarized_min(mu_, lambda);
    const double tie = left.a + lambda * left.b;
    const double scale = std::max(1.0, tie);
    const bool improves = probe.objective() < tie - 1e-12 * scale;
    const bool interior = probe.a > left.a + 1e-15 * scale &&
                          probe.a < right.a - 1e-15 * scale &&
                          probe.b < left.b - 1e-15 * scale &&
                          probe.b > right.b + 1e-15 * scale;
    if (!improves || !interior) return;
    ++budget_used_;
    FrontierVertex mid = to_vertex(std::move(probe));
    refine(left, mid, out);
    out.push_back(mid);
    refine(mid, right, out);
  }

  void set_used(std::size_t used) { budget_used_ = used; }

 private:
  const SignedMeasure& mu_;
  std::size_t max_points_;
  std::size_t budget_used_ = 0;
};

}  // namespace

Frontier trace_frontier(const SignedMeasure& mu, std::size_t max_points) {
  const SpacePtr& space = mu.space();
  Frontier frontier;
  FrontierVertex left{0.0, tv_norm(mu), SignedMeasure::zero(space),
                      TransportPlan{space, {}}};
  if (mu.is_zero() || space->size() < 2 || max_points < 2) {
    frontier.vertices.push_back(std::move(left));
    return frontier;
  }
  // Past diameter / 2 moving a matched pair is cheaper than annihilating it,
  // so this probe sits at the minimal-TV end of the curve.
  ScalarizedSolution far = scalarized_min(mu, space->diameter());
  const double scale = std::max(1.0, left.b);
  if (!(far.a > 1e-15 * scale) || !(far.b < left.b - 1e-15 * scale)) {
    frontier.vertices.push_back(std::move(left));
    return frontier;
  }
  FrontierVertex right = to_vertex(std::move(far));

  FrontierTracer tracer(mu, max_points);
  tracer.set_used(2);
  std::vector<FrontierVertex> inner;
  tracer.refine(left, right, inner);

  frontier.vertices.push_back(std::move(left));
  for (auto& v : inner) frontier.vertices.push_back(std::move(v));
  frontier.vertices.push_back(std::move(right));
  for (std::size_t k = 0; k + 1 < frontier.vertices.size(); ++k) {
    const auto& u = frontier.vertices[k];
    const auto& w = frontier.vertices[k + 1];
    frontier.slopes.push_back((w.a - u.a) / (u.b - w.b));
  }
  return frontier;
}

std::vector<FrontierPoint> pareto_frontier(const SignedMeasure& mu,
                                           std::size_t max_points) {
  if (max_points < 2) {
    throw Error(ErrorKind::kInvalidArgument, "max_points must be >= 2");
  }
  return trace_frontier(mu, max_points).points();
}

namespace {

constexpr std::size_t kExactFrontierCap = 1u << 20;
constexpr double kLambdaFloor = 1e-12;

// Weight on the TV term at which l^p is tangent to a + lambda * b at (a, b).
double tangent_weight(double a, double b, const HolderPair& hp) {
  if (hp.p == 1.0) return 1.0;
  if (std::isinf(hp.p)) {
    if (a > b) return 0.0;
    if (a < b) return kInfinity;
    return 1.0;
  }
  if (a == 0.0) return kInfinity;
  if (b == 0.0) return 0.0;
  return std::pow(b / a, hp.p - 1.0);
}

struct Candidate {
  double value = kInfinity;
  std::size_t vertex = 0;  // segment start
  double t = 0.0;          // position along the segment to vertex + 1
  double lambda = 0.0;     // dual weight
};

Candidate best_on_frontier(const Frontier& fr, const HolderPair& hp) {
  Candidate best;
  const std::size_t nv = fr.vertices.size();
  for (std::size_t k = 0; k < nv; ++k) {
    const auto& v = fr.vertices[k];
    const double val = lp_combine(v.a, v.b, hp.p);
    if (val < best.value) {
      const double lo = k == 0 ? 0.0 : fr.slopes[k - 1];
      const double hi = k + 1 == nv ? kInfinity : fr.slopes[k];
      best = {val, k, 0.0, std::clamp(tangent_weight(v.a, v.b, hp), lo, hi)};
    }
    if (k + 1 == nv || hp.p == 1.0) continue;
    // On a segment of slope lambda the l^p minimizer has a / b equal to
    // lambda^(-1 / (p - 1)) (1 for p = inf), which is linear in t.
    const auto& w = fr.vertices[k + 1];
    const double lambda = fr.slopes[k];
    const double ratio =
        std::isinf(hp.p) ? 1.0 : std::pow(lambda, -1.0 / (hp.p - 1.0));
    const double da = w.a - v.a, db = w.b - v.b;
    const double denom = da - ratio * db;
    if (!(denom > 0.0)) continue;
    const double t = (ratio * v.b - v.a) / denom;
    if (!(t > 0.0 && t < 1.0)) continue;
    const double seg_val = lp_combine(v.a + t * da, v.b + t * db, hp.p);
    if (seg_val < best.value) best = {seg_val, k, t, lambda};
  }
  return best;
}

}  // namespace

double lp_minimum(const Frontier& frontier, double p) {
  return best_on_frontier(frontier, HolderPair::from_p(p)).value;
}

namespace {

TransportPlan blend_plans(const TransportPlan& x, double wx,
                          const TransportPlan& y, double wy) {
  std::vector<PlanEntry> entries;
  for (const auto& e : x.entries) entries.push_back({e.from, e.to, wx * e.mass});
  for (const auto& e : y.entries) entries.push_back({e.from, e.to, wy * e.mass});
  return normalize_plan(x.space, std::move(entries));
}

LipschitzFunction witness_from_weight(const SignedMeasure& mu, double lambda) {
  if (std::isinf(lambda)) {
    // Pure-TV tangent: only the charge can be certified, by f = +-1.
    return LipschitzFunction::constant(mu.space(),
                                       total_charge(mu) >= 0.0 ? 1.0 : -1.0);
  }
  ScalarizedSolution s = scalarized_min(mu, std::max(lambda, kLambdaFloor));
  return LipschitzFunction(mu.space(), std::move(s.potentials));
}

}  // namespace

PkSolution pk_norm(const SignedMeasure& mu, double p, double tol) {
  const HolderPair hp = HolderPair::from_p(p);
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tol must be > 0");
  }
  const SpacePtr& space = mu.space();
  if (mu.is_zero()) {
    return PkSolution{hp,
                      0.0,
                      SignedMeasure::zero(space),
                      TransportPlan{space, {}},
                      0.0,
                      0.0,
                      {{0.0, 0.0, 0.0}},
                      LipschitzFunction::zero(space),
                      0.0};
  }

  const Frontier frontier = trace_frontier(mu, kExactFrontierCap);
  SignedMeasure xi = SignedMeasure::zero(space);
  TransportPlan plan{space, {}};
  LipschitzFunction f = LipschitzFunction::zero(space);

  if (hp.p == 1.0) {
    ScalarizedSolution s = scalarized_min(mu, 1.0);
    xi = std::move(s.xi);
    plan = std::move(s.plan);
    f = LipschitzFunction(space, std::move(s.potentials));
  } else {
    const Candidate best = best_on_frontier(frontier, hp);
    const auto& v = frontier.vertices[best.vertex];
    if (best.t == 0.0) {
      xi = v.xi;
      plan = v.plan;
    } else {
      const auto& w = frontier.vertices[best.vertex + 1];
      xi = (1.0 - best.t) * v.xi + best.t * w.xi;
      plan = blend_plans(v.plan, 1.0 - best.t, w.plan, best.t);
    }
    f = witness_from_weight(mu, best.lambda);
  }

  const double norm_f = ql_norm(f, hp.q);
  if (norm_f > 0.0) f *= 1.0 / norm_f;

  PkSolution sol{hp,    0.0, std::move(xi), std::move(plan), 0.0, 0.0,
                 frontier.points(), std::move(f), 0.0};
  sol.a = plan_cost(sol.plan);
  sol.b = tv_norm(mu - sol.xi);
  sol.value = lp_combine(sol.a, sol.b, hp.p);
  sol.gap = sol.value - pairing(sol.dual_f, mu);
  if (sol.gap > tol * std::max(1.0, sol.value)) {
    std::ostringstream msg;
    msg << "duality gap " << sol.gap << " exceeds tolerance " << tol;
    throw ToleranceNotMet(msg.str(), std::move(sol));
  }
  return sol;
}

PkSolution pk_dist(const SignedMeasure& mu, const SignedMeasure& nu, double p,
                   double tol) {
  require_same_space(mu.space(), nu.space());
  return pk_norm(mu - nu, p, tol);
}

}  // namespace pkr

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

#include "pkr/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pkr/error.hpp"
#include "pkr/pknorm.hpp"

namespace pkr {

namespace {

HolderPair conjugates(double p) {
  try {
    return HolderPair::from_p(p);
  } catch (const Error& e) {
    throw Error(ErrorKind::kConjugacyError, e.detail());
  }
}

double inverse(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

}  // namespace

Certificate check_optimality(const SignedMeasure& mu, const SignedMeasure& xi,
                             const TransportPlan& plan,
                             const LipschitzFunction& f, double p, double tol) {
  require_same_space(mu.space(), xi.space());
  require_same_space(mu.space(), plan.space);
  require_same_space(mu.space(), f.space());
  const HolderPair hp = conjugates(p);
  const SpacePtr& space = mu.space();

  const SignedMeasure div = plan_divergence(plan);
  double div_err = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    div_err = std::max(div_err, std::abs(div[i] - xi[i]));
  }
  if (div_err > 1e-9 * std::max(1.0, tv_norm(xi))) {
    std::ostringstream msg;
    msg << "plan divergence differs from xi by " << div_err;
    throw Error(ErrorKind::kDivergenceMismatch, msg.str());
  }

  Certificate cert;
  cert.tol = tol;
  const double lip = lip_const(f);
  const double sup = sup_norm(f);
  const SignedMeasure residual = mu - xi;
  cert.a = plan_cost(plan);
  cert.b = tv_norm(residual);
  cert.primal = lp_combine(cert.a, cert.b, hp.p);
  cert.pairing = pairing(f, mu);
  cert.gap = cert.primal - cert.pairing;

  cert.cond_i.residual = std::abs(lp_combine(lip, sup, hp.q) - 1.0);
  cert.cond_ii.residual = std::abs(lip * cert.a + sup * cert.b - cert.primal);

  const double plan_threshold = 1e-12 * std::max(1.0, tv_norm(xi));
  for (const auto& e : plan.entries) {
    if (!(e.mass > plan_threshold)) continue;
    const double r =
        std::abs(f[e.to] - f[e.from] - lip * space->distance(e.from, e.to));
    cert.cond_iii.residual = std::max(cert.cond_iii.residual, r);
  }

  const JordanParts parts = jordan_decompose(residual);
  for (std::size_t i : support(parts.positive)) {
    cert.cond_iv.residual = std::max(cert.cond_iv.residual, std::abs(f[i] - sup));
  }
  for (std::size_t i : support(parts.negative)) {
    cert.cond_iv.residual = std::max(cert.cond_iv.residual, std::abs(f[i] + sup));
  }

  const double threshold = tol * std::max(1.0, tv_norm(mu));
  for (ConditionResult* c :
       {&cert.cond_i, &cert.cond_ii, &cert.cond_iii, &cert.cond_iv}) {
    c->pass = c->residual <= threshold;
  }
  return cert;
}

double check_holder(const SignedMeasure& mu, const LipschitzFunction& f,
                    double p) {
  const HolderPair hp = conjugates(p);
  const double norm = pk_norm(mu, hp.p).value;
  return norm * ql_norm(f, hp.q) - std::abs(pairing(f, mu));
}

EquivalenceReport check_equivalence(const SignedMeasure& mu, double p1,
                                    double p2, double tol) {
  HolderPair::from_p(p1);
  HolderPair::from_p(p2);
  if (!(p1 <= p2)) {
    std::ostringstream msg;
    msg << "expected p1 <= p2, got " << p1 << " > " << p2;
    throw Error(ErrorKind::kOrderError, msg.str());
  }
  EquivalenceReport r;
  r.p1 = p1;
  r.p2 = p2;
  r.norm_p1 = pk_norm(mu, p1).value;
  r.norm_p2 = pk_norm(mu, p2).value;
  r.constant = std::pow(2.0, inverse(p1) - inverse(p2));
  r.lower_ok = r.norm_p2 <= r.norm_p1 + tol;
  r.upper_ok = r.norm_p1 <= r.constant * r.norm_p2 + tol;
  return r;
}

}  // namespace pkr

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

#ifndef PKR_CERTIFY_HPP_
#define PKR_CERTIFY_HPP_

#include <array>

#include "pkr/lipschitz.hpp"
#include "pkr/space.hpp"
#include "pkr/transport.hpp"

namespace pkr {

inline constexpr double kDefaultCertifyTol = 1e-6;

struct ConditionResult {
  double residual = 0.0;
  bool pass = true;
};

// Residuals of the four optimality conditions for a proposed (xi, plan, f):
//   i   | ||f||_qL - 1 |
//   ii  | lip(f) a + sup(f) b - l^p(a, b) |, a = plan cost, b = TV(mu - xi)
//   iii max over plan entries of | f(to) - f(from) - lip(f) d(from, to) |
//   iv  max over supp((mu - xi)_+) of |f - sup(f)| and over
//       supp((mu - xi)_-) of |f + sup(f)|
struct Certificate {
  ConditionResult cond_i;
  ConditionResult cond_ii;
  ConditionResult cond_iii;
  ConditionResult cond_iv;
  double a = 0.0;
  double b = 0.0;
  double primal = 0.0;   // l^p(a, b)
  double pairing = 0.0;  // pairing(f, mu)
  double gap = 0.0;      // primal - pairing
  double tol = kDefaultCertifyTol;

  bool passed() const {
    return cond_i.pass && cond_ii.pass && cond_iii.pass && cond_iv.pass;
  }
};

// Pass/fail is decided at tol * max(1, TV(mu)). Throws DivergenceMismatch
// when the plan does not move xi, ConjugacyError for p < 1.
Certificate check_optimality(const SignedMeasure& mu, const SignedMeasure& xi,
                             const TransportPlan& plan,
                             const LipschitzFunction& f, double p,
                             double tol = kDefaultCertifyTol);

// ||mu||_pK * ||f||_qL - |pairing(f, mu)|; nonnegative up to rounding.
double check_holder(const SignedMeasure& mu, const LipschitzFunction& f,
                    double p);

struct EquivalenceReport {
  double p1 = 1.0;
  double p2 = 1.0;
  double norm_p1 = 0.0;
  double norm_p2 = 0.0;
  double constant = 1.0;  // 2^(1/p1 - 1/p2)
  bool lower_ok = true;   // norm_p2 <= norm_p1 + tol
  bool upper_ok = true;   // norm_p1 <= constant * norm_p2 + tol

  bool passed() const { return lower_ok && upper_ok; }
};

// Throws OrderError unless p1 <= p2.
EquivalenceReport check_equivalence(const SignedMeasure& mu, double p1,
                                    double p2, double tol = 1e-8);

}  // namespace pkr

#endif  // PKR_CERTIFY_HPP_

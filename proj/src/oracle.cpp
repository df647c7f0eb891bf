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

#include "pkr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "pkr/error.hpp"

namespace pkr::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lp(double a, double b, double p) {
  if (std::isinf(p)) return std::max(a, b);
  return std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
}

double tv(const std::vector<double>& w) {
  double s = 0.0;
  for (double x : w) s += std::abs(x);
  return s;
}

// KR norm when one Jordan part sits on a single point, where the plan is
// forced: every unit of the other part travels to (or from) that point.
// Always the case for n <= 3.
double forced_kr(const FiniteMetricSpace& space, const std::vector<double>& xi) {
  int pos = 0, neg = 0;
  std::size_t pos_at = 0, neg_at = 0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] > 0.0) {
      ++pos;
      pos_at = i;
    } else if (xi[i] < 0.0) {
      ++neg;
      neg_at = i;
    }
  }
  if (pos == 0 || neg == 0) return 0.0;
  const std::size_t hub = pos == 1 ? pos_at : neg_at;
  if (pos != 1 && neg != 1) {
    throw Error(ErrorKind::kTooLarge, "plan is not forced");
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (i != hub) cost += std::abs(xi[i]) * space.distance(i, hub);
  }
  return cost;
}

}  // namespace

SignedMeasure RationalMeasure::to_measure() const {
  std::vector<double> w;
  for (long long k : numerators) {
    w.push_back(static_cast<double>(k) / static_cast<double>(denominator));
  }
  return SignedMeasure(space, std::move(w));
}

double oracle_kr(const RationalMeasure& xi) {
  if (!xi.space || xi.numerators.size() != xi.space->size()) {
    throw Error(ErrorKind::kDimensionMismatch, "numerators do not match space");
  }
  if (xi.denominator <= 0 || xi.denominator > 100) {
    throw Error(ErrorKind::kInvalidArgument, "denominator must be in (0, 100]");
  }
  long long atoms = 0, charge = 0;
  for (long long k : xi.numerators) {
    atoms += std::llabs(k);
    charge += k;
  }
  if (charge != 0) {
    throw Error(ErrorKind::kNonZeroCharge, "numerators do not sum to zero");
  }
  if (atoms > kMaxAtoms) {
    throw Error(ErrorKind::kTooManyAtoms,
                std::to_string(atoms) + " atoms exceed the limit of " +
                    std::to_string(kMaxAtoms));
  }
  std::vector<std::size_t> sources, sinks;
  for (std::size_t i = 0; i < xi.numerators.size(); ++i) {
    for (long long k = 0; k < std::llabs(xi.numerators[i]); ++k) {
      (xi.numerators[i] < 0 ? sources : sinks).push_back(i);
    }
  }
  // sinks starts sorted, so next_permutation visits every bijection.
  double best = sources.empty() ? 0.0 : kInf;
  if (!sources.empty()) {
    do {
      double cost = 0.0;
      for (std::size_t k = 0; k < sources.size(); ++k) {
        cost += xi.space->distance(sources[k], sinks[k]);
      }
      best = std::min(best, cost);
    } while (std::next_permutation(sinks.begin(), sinks.end()));
  }
  return best / static_cast<double>(xi.denominator);
}

double oracle_pk(const SignedMeasure& mu, double p, int grid_steps) {
  const FiniteMetricSpace& space = *mu.space();
  const std::size_t n = space.size();
  if (n > 3) throw Error(ErrorKind::kTooLarge, "oracle_pk needs n <= 3");
  if (grid_steps < 10) {
    throw Error(ErrorKind::kInvalidArgument, "grid_steps must be >= 10");
  }
  if (!(p >= 1.0)) throw Error(ErrorKind::kInvalidP, "p must be >= 1");
  const std::vector<double> w(mu.weights().begin(), mu.weights().end());
  const double mu_tv = tv(w);
  if (n < 2 || mu_tv == 0.0) return mu_tv;

  // A zero-charge xi is fixed by its first n - 1 coordinates.
  const std::size_t dims = n - 1;
  auto objective = [&](const std::vector<double>& x) {
    std::vector<double> xi(n, 0.0);
    double last = 0.0;
    for (std::size_t k = 0; k < dims; ++k) {
      xi[k] = x[k];
      last -= x[k];
    }
    xi[n - 1] = last;
    std::vector<double> rest(n);
    for (std::size_t i = 0; i < n; ++i) rest[i] = w[i] - xi[i];
    return lp(forced_kr(space, xi), tv(rest), p);
  };

  // xi = 0 scores TV(mu). If TV(xi) > 2 TV(mu) then TV(mu - xi) > TV(mu), so
  // both coordinates exceed the xi = 0 point and the box loses nothing.
  const double radius = 2.0 * mu_tv;
  const double cell = 2.0 * radius / grid_steps;

  struct Seed {
    double value;
    std::vector<double> x;
  };
  std::vector<Seed> seeds;
  auto offer = [&](std::vector<double> x) {
    const double v = objective(x);
    seeds.push_back({v, std::move(x)});
    std::sort(seeds.begin(), seeds.end(),
              [](const Seed& a, const Seed& b) { return a.value < b.value; });
    if (seeds.size() > 4) seeds.pop_back();
  };
  offer(std::vector<double>(dims, 0.0));
  std::vector<int> idx(dims, 0);
  while (true) {
    std::vector<double> x(dims);
    for (std::size_t k = 0; k < dims; ++k) x[k] = -radius + cell * idx[k];
    offer(std::move(x));
    std::size_t k = 0;
    while (k < dims && ++idx[k] > grid_steps) idx[k++] = 0;
    if (k == dims) break;
  }

  // Pattern search with many directions so that kinks of the convex
  // objective do not stall it.
  std::vector<std::vector<double>> dirs;
  if (dims == 1) {
    dirs = {{1.0}, {-1.0}};
  } else {
    constexpr int kDirections = 64;
    for (int k = 0; k < kDirections; ++k) {
      const double ang = 2.0 * std::numbers::pi * k / kDirections;
      dirs.push_back({std::cos(ang), std::sin(ang)});
    }
  }
  double best = kInf;
  for (Seed& seed : seeds) {
    double step = cell;
    double value = seed.value;
    std::vector<double> x = seed.x;
    while (step > 1e-10 * std::max(1.0, radius)) {
      bool moved = false;
      for (const auto& d : dirs) {
        std::vector<double> y = x;
        for (std::size_t k = 0; k < dims; ++k) y[k] += step * d[k];
        const double v = objective(y);
        if (v < value) {
          value = v;
          x = std::move(y);
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    best = std::min(best, value);
  }
  return best;
}

double oracle_dual(const SignedMeasure& mu, double q, int samples,
                   std::uint64_t seed) {
  if (samples < 1000) {
    throw Error(ErrorKind::kInvalidArgument, "samples must be >= 1000");
  }
  if (!(q >= 1.0)) throw Error(ErrorKind::kInvalidQ, "q must be >= 1");
  const FiniteMetricSpace& space = *mu.space();
  const std::size_t n = space.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double best = 0.0;
  std::vector<double> f(n);
  for (int s = 0; s < samples; ++s) {
    for (double& v : f) v = unif(rng);
    double lip = 0.0, sup = 0.0, pair = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sup = std::max(sup, std::abs(f[i]));
      pair += f[i] * mu[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        lip = std::max(lip, std::abs(f[i] - f[j]) / space.distance(i, j));
      }
    }
    const double norm = lp(lip, sup, q);
    if (norm > 0.0) best = std::max(best, std::abs(pair) / norm);
  }
  return best;
}

}  // namespace pkr::oracle

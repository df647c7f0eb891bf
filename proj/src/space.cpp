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

#include "pkr/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "pkr/error.hpp"

namespace pkr {

struct SpaceFactory {
  static SpacePtr make(std::vector<std::string> labels, std::vector<double> dist,
                       double diameter) {
    return SpacePtr(new FiniteMetricSpace(std::move(labels), std::move(dist),
                                          diameter));
  }
};

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<double> dist, double diameter)
    : labels_(std::move(labels)), dist_(std::move(dist)), diameter_(diameter) {}

std::optional<std::size_t> FiniteMetricSpace::index_of(
    std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

namespace {

std::string pair_name(const std::vector<std::string>& labels, std::size_t i,
                      std::size_t j) {
  return "(" + labels[i] + ", " + labels[j] + ")";
}

}  // namespace

SpacePtr validate_space(std::vector<std::string> labels,
                        const std::vector<std::vector<double>>& matrix,
                        const ValidationOptions& options) {
  const std::size_t n = matrix.size();
  if (options.tol < 0.0 || !std::isfinite(options.tol)) {
    throw Error(ErrorKind::kInvalidArgument, "tolerance must be >= 0");
  }
  if (labels.empty() && n > 0) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  }
  if (labels.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(labels.size()) + " labels for a " +
                    std::to_string(n) + "-row matrix");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorKind::kDuplicateLabel, "label '" + l + "' repeats");
      }
    }
  }

  std::vector<double> dist(n * n);
  double diameter = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(matrix[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double d = matrix[i][j];
      if (!std::isfinite(d)) {
        throw Error(ErrorKind::kNonFiniteValue,
                    "entry " + pair_name(labels, i, j) + " is not finite");
      }
      dist[i * n + j] = d;
      diameter = std::max(diameter, d);
    }
  }
  const double abs_tol = options.tol * std::max(1.0, diameter);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i * n + j] < 0.0) {
        throw Error(ErrorKind::kNegativeDistance,
                    "d" + pair_name(labels, i, j) + " < 0");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i * n + i] > abs_tol) {
      throw Error(ErrorKind::kNonZeroDiagonal,
                  "d" + pair_name(labels, i, i) + " != 0");
    }
    dist[i * n + i] = 0.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = dist[i * n + j];
      const double dji = dist[j * n + i];
      if (std::abs(dij - dji) > abs_tol) {
        std::ostringstream msg;
        msg << "d" << pair_name(labels, i, j) << " = " << dij << " but d"
            << pair_name(labels, j, i) << " = " << dji;
        throw Error(ErrorKind::kAsymmetryError, msg.str());
      }
      if (std::max(dij, dji) <= abs_tol) {
        throw Error(ErrorKind::kZeroOffDiagonal,
                    "points " + pair_name(labels, i, j) + " coincide");
      }
    }
  }

  // Report the worst violation rather than the first one found.
  double worst = 0.0;
  std::size_t wi = 0, wj = 0, wk = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dij = dist[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess = dij - (dist[i * n + k] + dist[k * n + j]);
        if (excess > worst) {
          worst = excess;
          wi = i;
          wj = j;
          wk = k;
        }
      }
    }
  }
  if (worst > abs_tol) {
    std::ostringstream msg;
    msg << "d(" << labels[wi] << ", " << labels[wj] << ") = " << dist[wi * n + wj]
        << " > d(" << labels[wi] << ", " << labels[wk] << ") + d(" << labels[wk]
        << ", " << labels[wj] << ") = "
        << dist[wi * n + wk] + dist[wk * n + wj];
    throw Error(ErrorKind::kTriangleViolation, msg.str());
  }

  if (options.allow_repair) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double avg = 0.5 * (dist[i * n + j] + dist[j * n + i]);
        dist[i * n + j] = avg;
        dist[j * n + i] = avg;
      }
    }
    diameter = *std::max_element(dist.begin(), dist.end());
  }
  if (n == 0) diameter = 0.0;
  return SpaceFactory::make(std::move(labels), std::move(dist), diameter);
}

SpacePtr from_euclidean(const std::vector<std::vector<double>>& coords,
                        std::vector<std::string> labels) {
  const std::size_t n = coords.size();
  const std::size_t dim = n > 0 ? coords.front().size() : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i].size() != dim) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "point " + std::to_string(i) + " has dimension " +
                      std::to_string(coords[i].size()) + ", expected " +
                      std::to_string(dim));
    }
  }
  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = coords[i][k] - coords[j][k];
        sq += diff * diff;
      }
      matrix[i][j] = matrix[j][i] = std::sqrt(sq);
    }
  }
  return validate_space(std::move(labels), matrix);
}

SignedMeasure::SignedMeasure(SpacePtr space, std::vector<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (!space_) throw Error(ErrorKind::kInvalidArgument, "null space");
  if (weights_.size() != space_->size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(weights_.size()) + " weights for a space of " +
                    std::to_string(space_->size()) + " points");
  }
  for (double w : weights_) {
    if (!std::isfinite(w)) {
      throw Error(ErrorKind::kNonFiniteValue, "measure weight is not finite");
    }
  }
}

SignedMeasure SignedMeasure::zero(SpacePtr space) {
  const std::size_t n = space ? space->size() : 0;
  return SignedMeasure(std::move(space), std::vector<double>(n, 0.0));
}

bool SignedMeasure::is_zero() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](double w) { return w == 0.0; });
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a.get() != b.get()) {
    throw Error(ErrorKind::kSpaceMismatch,
                "operands belong to different space instances");
  }
}

SignedMeasure& SignedMeasure::operator+=(const SignedMeasure& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < weights_.size(); ++i) weights_[i] += other.weights_[i];
  return *this;
}

SignedMeasure& SignedMeasure::operator-=(const SignedMeasure& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < weights_.size(); ++i) weights_[i] -= other.weights_[i];
  return *this;
}

SignedMeasure& SignedMeasure::operator*=(double factor) {
  for (double& w : weights_) w *= factor;
  return *this;
}

SignedMeasure dirac(const SpacePtr& space, std::size_t index, double mass) {
  if (!space || index >= space->size()) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "point index " + std::to_string(index) + " out of range");
  }
  std::vector<double> w(space->size(), 0.0);
  w[index] = mass;
  return SignedMeasure(space, std::move(w));
}

JordanParts jordan_decompose(const SignedMeasure& mu) {
  std::vector<double> pos(mu.size()), neg(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    pos[i] = std::max(mu[i], 0.0);
    neg[i] = std::max(-mu[i], 0.0);
  }
  return {SignedMeasure(mu.space(), std::move(pos)),
          SignedMeasure(mu.space(), std::move(neg))};
}

double tv_norm(const SignedMeasure& mu) {
  double s = 0.0;
  for (double w : mu.weights()) s += std::abs(w);
  return s;
}

double total_charge(const SignedMeasure& mu) {
  const auto w = mu.weights();
  return std::accumulate(w.begin(), w.end(), 0.0);
}

std::vector<std::size_t> support(const SignedMeasure& mu, double tol) {
  const double threshold = tol * std::max(1.0, tv_norm(mu));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (std::abs(mu[i]) > threshold) out.push_back(i);
  }
  return out;
}

}  // namespace pkr

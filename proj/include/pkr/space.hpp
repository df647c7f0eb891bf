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

#ifndef PKR_SPACE_HPP_
#define PKR_SPACE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pkr {

class FiniteMetricSpace;
using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

// A finite point set with a validated distance matrix. Instances are only
// created through validate_space() / from_euclidean() and are immutable.
class FiniteMetricSpace {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  double distance(std::size_t i, std::size_t j) const noexcept {
    return dist_[i * labels_.size() + j];
  }
  double diameter() const noexcept { return diameter_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

 private:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist,
                    double diameter);

  friend struct SpaceFactory;

  std::vector<std::string> labels_;
  std::vector<double> dist_;  // row-major n x n
  double diameter_;
};

struct ValidationOptions {
  // Relative to max(1, diameter).
  double tol = 1e-9;
  // Replace the matrix by (d + d^T) / 2 after the checks pass.
  bool allow_repair = false;
};

// Checks the metric axioms and builds a space. Throws pkr::Error with kind
// DimensionMismatch, NonFiniteValue, DuplicateLabel, NegativeDistance,
// NonZeroDiagonal, AsymmetryError, ZeroOffDiagonal or TriangleViolation.
SpacePtr validate_space(std::vector<std::string> labels,
                        const std::vector<std::vector<double>>& matrix,
                        const ValidationOptions& options = {});

// Pairwise Euclidean distances between coordinate vectors. Labels default
// to "p0", "p1", ... when empty.
SpacePtr from_euclidean(const std::vector<std::vector<double>>& coords,
                        std::vector<std::string> labels = {});

// Real weights over the points of one space. Arithmetic between measures on
// different space instances throws SpaceMismatch.
class SignedMeasure {
 public:
  SignedMeasure(SpacePtr space, std::vector<double> weights);
  static SignedMeasure zero(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  bool is_zero() const noexcept;

  SignedMeasure& operator+=(const SignedMeasure& other);
  SignedMeasure& operator-=(const SignedMeasure& other);
  SignedMeasure& operator*=(double factor);

  friend SignedMeasure operator+(SignedMeasure lhs, const SignedMeasure& rhs) {
    return lhs += rhs;
  }
  friend SignedMeasure operator-(SignedMeasure lhs, const SignedMeasure& rhs) {
    return lhs -= rhs;
  }
  friend SignedMeasure operator*(double factor, SignedMeasure m) {
    return m *= factor;
  }
  friend SignedMeasure operator-(SignedMeasure m) { return m *= -1.0; }

 private:
  SpacePtr space_;
  std::vector<double> weights_;
};

// Throws SpaceMismatch unless both objects refer to the same space instance.
void require_same_space(const SpacePtr& a, const SpacePtr& b);

SignedMeasure dirac(const SpacePtr& space, std::size_t index, double mass = 1.0);

struct JordanParts {
  SignedMeasure positive;
  SignedMeasure negative;
};
JordanParts jordan_decompose(const SignedMeasure& mu);

// Total mass of |mu|, so that tv_norm(dirac(x) - dirac(y)) == 2.
double tv_norm(const SignedMeasure& mu);
double total_charge(const SignedMeasure& mu);

// Indices i with |w_i| > tol * max(1, tv_norm(mu)).
std::vector<std::size_t> support(const SignedMeasure& mu, double tol = 1e-12);

}  // namespace pkr

#endif  // PKR_SPACE_HPP_

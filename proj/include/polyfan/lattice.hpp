// Copyright 2026 The Authors.
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

// Integer lattices Z^E and Z^E / Z e_E, primitive vectors and simplicial cones.
//
// A quotient-mode vector is stored in canonical form: the class of x is
// represented by x - x_last * e_E with the last coordinate dropped, which is a
// bijection Z^E / Z e_E -> Z^{|E|-1}.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyfan/checked.hpp"

namespace polyfan {

class GroundOrder {
 public:
  GroundOrder() = default;
  explicit GroundOrder(std::vector<std::string> labels);

  // Labels "1", "2", ..., "n".
  static GroundOrder numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index(const std::string& label) const;
  std::size_t index_or_throw(const std::string& label) const;

  bool operator==(const GroundOrder& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class AmbientMode { kFull, kQuotientByAllOnes };

class AmbientSpace {
 public:
  AmbientSpace() : AmbientSpace(GroundOrder{}, AmbientMode::kFull) {}
  AmbientSpace(GroundOrder ground, AmbientMode mode);

  static AmbientSpace full(GroundOrder ground) {
    return AmbientSpace(std::move(ground), AmbientMode::kFull);
  }
  static AmbientSpace quotient(GroundOrder ground) {
    return AmbientSpace(std::move(ground), AmbientMode::kQuotientByAllOnes);
  }

  const GroundOrder& ground() const { return *ground_; }
  AmbientMode mode() const { return mode_; }
  bool is_quotient() const { return mode_ == AmbientMode::kQuotientByAllOnes; }
  // Rank of the effective lattice.
  std::size_t dim() const;

  bool operator==(const AmbientSpace& o) const {
    return mode_ == o.mode_ && (ground_ == o.ground_ || *ground_ == *o.ground_);
  }

 private:
  std::shared_ptr<const GroundOrder> ground_;
  AmbientMode mode_;
};

// Coordinates of a lattice vector in the canonical coordinates of its ambient
// space (length = ambient.dim()).
struct IntVector {
  std::vector<std::int64_t> coords;

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const;

  auto operator<=>(const IntVector&) const = default;
  bool operator==(const IntVector&) const = default;

  IntVector operator+(const IntVector& o) const;
  IntVector operator-(const IntVector& o) const;
  IntVector operator-() const;
  IntVector scaled(std::int64_t k) const;
  std::int64_t dot(const IntVector& o) const;
  std::string str() const;
};

using Matrix = std::vector<std::vector<std::int64_t>>;

// Reduces a raw vector over the ground set to canonical coordinates without
// changing its scale.
IntVector canonical_vector(std::span<const std::int64_t> raw, const AmbientSpace& ambient);

// Sum of e_i over a bitmask of ground indices, canonicalized.
IntVector indicator_vector(std::uint64_t subset, const AmbientSpace& ambient);

// The unique primitive positive multiple representative of raw, in canonical
// form. Throws ZeroVector if raw is zero in the effective lattice.
IntVector primitive_vector(std::span<const std::int64_t> raw, const AmbientSpace& ambient);

// Divides a canonical vector by the gcd of its coordinates.
IntVector make_primitive(IntVector v);
bool is_primitive(const IntVector& v);

std::size_t matrix_rank(const std::vector<IntVector>& rows);
std::int64_t determinant(const std::vector<IntVector>& square_rows);

// Nonzero invariant factors of the integer matrix whose rows are `rows`.
std::vector<std::int64_t> smith_invariant_factors(const std::vector<IntVector>& rows);

// A simplicial cone: linearly independent primitive generators stored sorted.
class Cone {
 public:
  Cone() = default;
  // Validates primitivity and independence. Throws DependentGenerators.
  Cone(AmbientSpace ambient, std::vector<IntVector> generators);

  const AmbientSpace& ambient() const { return ambient_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  std::size_t dim() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }

  // Exact membership and relative-interior membership.
  bool contains(const IntVector& point) const;
  bool relint_contains(const IntVector& point) const;
  bool contains(const Cone& other) const;
  // Sum of generators; lies in the relative interior.
  IntVector interior_point() const;

  bool operator==(const Cone& o) const {
    return ambient_ == o.ambient_ && generators_ == o.generators_;
  }

 private:
  AmbientSpace ambient_;
  std::vector<IntVector> generators_;
};

// Signs of the unique coefficients expressing point in the span of the
// independent generators, or nullopt if point is outside their span.
std::optional<std::vector<int>> coefficient_signs(const std::vector<IntVector>& generators,
                                                  const IntVector& point);

bool cone_is_smooth(const Cone& cone);

// Unimodular integer matrix U with U * v = e_0, for primitive v.
Matrix unimodular_completion(const IntVector& v);
IntVector apply(const Matrix& m, const IntVector& v);

}  // namespace polyfan

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

// Simplicial fans stored by their maximal cones, and the operations on them.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyfan/lattice.hpp"

namespace polyfan {

using RayIndices = std::vector<std::size_t>;

class Fan {
 public:
  Fan() = default;

  // Canonical form: rays sorted and deduplicated, each cone a sorted index
  // list, cones sorted, cones that are faces of other listed cones dropped.
  // Generators are not checked for independence here; fan_validate reports it.
  Fan(AmbientSpace ambient, std::vector<IntVector> rays, std::vector<RayIndices> cones);

  static Fan from_generators(AmbientSpace ambient,
                             const std::vector<std::vector<IntVector>>& cones);

  const AmbientSpace& ambient() const { return ambient_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<RayIndices>& maximal_cones() const { return cones_; }
  std::size_t num_maximal_cones() const { return cones_.size(); }

  std::optional<std::size_t> ray_index(const IntVector& ray) const;
  std::vector<IntVector> generators(std::size_t cone) const;
  Cone cone(std::size_t i) const { return Cone(ambient_, generators(i)); }

  // Ray indices of tau if tau is a face of some maximal cone.
  std::optional<RayIndices> face_indices(const Cone& tau) const;
  bool has_cone(const Cone& tau) const { return face_indices(tau).has_value(); }

  bool operator==(const Fan& o) const {
    return ambient_ == o.ambient_ && rays_ == o.rays_ && cones_ == o.cones_;
  }

 private:
  AmbientSpace ambient_;
  std::vector<IntVector> rays_;
  std::vector<RayIndices> cones_;
};

struct FanReport {
  bool is_fan = false;
  bool is_simplicial = false;
  bool is_smooth = false;
  bool is_complete = false;
  std::vector<std::string> witnesses;

  bool all() const { return is_fan && is_simplicial && is_smooth && is_complete; }
};

FanReport fan_validate(const Fan& f);

// Star subdivision along tau. Throws ConeNotInFan.
Fan star_subdivision(const Fan& f, const Cone& tau);

// Throw AmbientMismatch when the ambients differ.
bool fan_equal(const Fan& f, const Fan& g);
bool fan_refines(const Fan& fine, const Fan& coarse);

// Fan of images in N / N_rho of the cones containing rho. Throws NotARay.
Fan star_of_ray(const Fan& f, const IntVector& rho);

struct OpenStar {
  Fan sigma_prime;         // faces of cones containing rho
  Fan sigma_double_prime;  // those not containing rho
};
OpenStar open_star_subfans(const Fan& f, const IntVector& rho);

// Normal fan of the simplex: cones over proper subsets of {e_1,...,e_n} in
// Z^n / Z e. For n = 1 this is the point fan.
Fan simplex_fan(const GroundOrder& ground);

// The fan with the single zero cone in a 0-dimensional ambient.
Fan point_fan(const GroundOrder& ground);

}  // namespace polyfan

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


// Exact certification that a fan is the inner normal fan of a polymatroid
// polytope, using minimizers over the greedy vertex list.

#pragma once

#include <cstdint>
#include <vector>

#include "polyfan/fan.hpp"
#include "polyfan/flag_fans.hpp"
#include "polyfan/polymatroid.hpp"

namespace polyfan {

struct MinimizationResult {
  IntVector direction;                  // as given, before any lift
  std::int64_t optimal_value = 0;
  std::vector<std::size_t> optimal_face;  // indices into the vertex list, increasing
};

// Minimizers of <w, x> over the vertices. A w one coordinate short of the
// vertices is read as a quotient direction and lifted with a trailing 0.
// Throws EmptyVertexList and AmbientMismatch.
MinimizationResult min_face(const IntVector& w, const VertexList& vertices);

// Passes iff every maximal cone has a unique minimizing vertex at its ray sum
// that also minimizes each ray, and cones and vertices correspond
// bijectively. Throws AmbientMismatch when the fan's ambient does not match
// the polytope (quotient for base mode, full otherwise).
Report check_inner_normal_fan(const Fan& f, const IndependencePolytope& p);

}  // namespace polyfan

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

// Integer polymatroids and their independence and base polytopes.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyfan/building_sets.hpp"
#include "polyfan/lattice.hpp"

namespace polyfan {

class RankFunction {
 public:
  RankFunction() = default;

  // table[s] is the rank of the subset with bitmask s. Throws NotNormalized,
  // NotMonotone or NotSubmodular with witness subsets.
  static RankFunction validate(GroundOrder ground, std::vector<std::int64_t> table);

  const GroundOrder& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::int64_t operator()(Subset s) const { return table_.at(s); }
  const std::vector<std::int64_t>& table() const { return table_; }

  bool operator==(const RankFunction& o) const {
    return ground_ == o.ground_ && table_ == o.table_;
  }

 private:
  GroundOrder ground_;
  std::vector<std::int64_t> table_;
};

// f(S) = n + (n-1) + ... + (n-|S|+1) on {1..n}.
RankFunction perm_rank(std::size_t n);

// S -> f(pi(S)) on the source of pi. Throws GroundMismatch.
RankFunction expansion(const RankFunction& f, const Caging& pi);

// Polymatroid generated from a random modular function by random
// truncations that keep the axioms.
RankFunction random_polymatroid(std::size_t n, std::uint64_t seed);

// coeffs . x <= bound
struct Inequality {
  std::vector<std::int64_t> coeffs;
  std::int64_t bound = 0;
};

// {x >= 0, x_S <= f(S)}, plus x_E = f(E) in base mode.
class IndependencePolytope {
 public:
  IndependencePolytope(RankFunction rank, bool base_mode);

  const RankFunction& rank() const { return rank_; }
  bool base_mode() const { return base_mode_; }
  std::size_t dim() const { return rank_.size(); }

  std::vector<Inequality> inequalities() const;
  // Empty unless base mode.
  std::vector<Inequality> equalities() const;
  bool contains(const IntVector& x) const;
  // Coordinatewise upper bounds f({i}).
  std::vector<std::int64_t> box() const;

 private:
  RankFunction rank_;
  bool base_mode_;
};

struct VertexList {
  std::vector<IntVector> vertices;  // sorted, distinct
  bool complete = false;
};

// Greedy points over all orderings (base mode) or ordered subsets
// (independence mode).
VertexList greedy_vertices(const IndependencePolytope& p);

// All lattice points of p, sorted.
std::vector<IntVector> lattice_points(const IndependencePolytope& p);

struct CharacterizationReport {
  bool downward_closed = true;
  bool equal_maximal_sums = true;
  std::vector<std::string> witnesses;

  bool pass() const { return downward_closed && equal_maximal_sums; }
};

// Checks on lattice points inside the box [0, box]: (1) closure under
// decreasing coordinates, (2) for each v in the box, all maximal points of the
// set below v share one coordinate sum.
CharacterizationReport check_independence_characterization(const std::vector<IntVector>& points,
                                                           const std::vector<std::int64_t>& box);

// S -> max x_S over the greedy vertices.
RankFunction recover_rank(const IndependencePolytope& p);

}  // namespace polyfan

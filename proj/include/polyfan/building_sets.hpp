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

// Cagings, building sets, nested sets and nested fans.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyfan/fan.hpp"
#include "polyfan/lattice.hpp"

namespace polyfan {

// A subset of a ground order as a bitmask of positions.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxGround = 62;

inline Subset bit(std::size_t i) { return Subset{1} << i; }
inline Subset full_subset(std::size_t n) { return n == 0 ? 0 : (~Subset{0} >> (64 - n)); }
inline std::size_t cardinality(Subset s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

// Labels of the members of s in ground order, e.g. "{1,3}".
std::string subset_str(Subset s, const GroundOrder& ground);

// A surjection pi: A -> E.
class Caging {
 public:
  Caging() = default;
  // Throws InvalidArgument unless map is a surjection onto target.
  Caging(GroundOrder source, GroundOrder target, std::vector<std::size_t> map);

  // Canonical caging of a cage (a_1,...,a_n): A = {1..m} in consecutive
  // blocks of sizes a_i over E = {1..n}. Throws BadCage.
  static Caging from_cage(const std::vector<std::size_t>& cage);
  // Parses "2,1,1". Throws BadCage.
  static Caging parse_cage(std::string_view text);
  static Caging identity(GroundOrder ground);

  const GroundOrder& source() const { return source_; }
  const GroundOrder& target() const { return target_; }
  std::size_t image(std::size_t a) const { return map_.at(a); }
  const std::vector<std::size_t>& map() const { return map_; }
  std::vector<std::size_t> cage() const;

  Subset fiber(std::size_t e) const { return fibers_.at(e); }
  Subset preimage(Subset s) const;
  Subset image_of(Subset s) const;
  // The E-elements whose whole fiber lies in i.
  Subset full_fibers_in(Subset i) const;

  // Every fiber of this caging lies inside a fiber of coarser (same source).
  bool refines(const Caging& coarser) const;

  std::string cage_str() const;

 private:
  GroundOrder source_;
  GroundOrder target_;
  std::vector<std::size_t> map_;
  std::vector<Subset> fibers_;
};

class BuildingSet {
 public:
  BuildingSet() = default;

  // Throws MissingSingleton or UnionViolation.
  static BuildingSet validate(GroundOrder ground, std::vector<Subset> members);

  const GroundOrder& ground() const { return ground_; }
  // Sorted by bitmask value.
  const std::vector<Subset>& members() const { return members_; }
  bool contains(Subset s) const;
  // The ground set itself is a member.
  bool is_connected() const { return contains(full_subset(ground_.size())); }

  bool operator==(const BuildingSet& o) const {
    return ground_ == o.ground_ && members_ == o.members_;
  }

 private:
  GroundOrder ground_;
  std::vector<Subset> members_;
};

BuildingSet boolean_building_set(const GroundOrder& ground);
// Throws DisconnectedGraph.
BuildingSet graphical_building_set(const GroundOrder& ground,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges);
// Throws GroundMismatch.
BuildingSet pullback_building_set(const BuildingSet& b, const Caging& pi);

struct NestedSet {
  std::vector<Subset> members;  // sorted

  auto operator<=>(const NestedSet&) const = default;
};

// All nested sets of a connected building set, including the empty one,
// sorted. Throws NotConnected.
std::vector<NestedSet> enumerate_nested_sets(const BuildingSet& b);

// Cones cone(e_S | S in N) in Z^E / Z e_E. Throws NotConnected.
Fan nested_fan(const BuildingSet& b);

// The simplex fan star-subdivided along cone(e_i | i in I) for the
// nonsingleton proper members I, largest first, ties by bitmask.
Fan nested_fan_by_subdivision(const BuildingSet& b);

// The subdivision order used by nested_fan_by_subdivision.
std::vector<Subset> subdivision_order(const BuildingSet& b);

// cone(e_i | i in s) in the all-ones quotient of ground.
Cone coordinate_cone(Subset s, const AmbientSpace& ambient);

struct PiPair {
  Subset i = 0;  // over the source of the caging
  NestedSet n;   // over the target building set

  auto operator<=>(const PiPair&) const = default;
};

// The nested set {{i} | i in I} u {pi^-1(S) | S in N} of the pullback.
NestedSet pi_pair_nested_set(const PiPair& p, const Caging& pi);

// All pi-pairs, sorted. The bijection with the nested sets of the pullback is
// checked and a mismatch throws InternalInvariant. Throws NotConnected.
std::vector<PiPair> enumerate_pi_pairs(const Caging& pi, const BuildingSet& b);

// cone(e_i | i in I) + cone(e_{pi^-1(S)} | S in N) in Z^A / Z e_A.
Cone pi_pair_cone(const PiPair& p, const Caging& pi);

}  // namespace polyfan

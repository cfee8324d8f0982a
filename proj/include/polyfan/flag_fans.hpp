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

// Compatible triples, the interpolating fans between a product of projective
// spaces and the polystellahedral fan, and the checks relating them to
// polypermutohedral fans.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyfan/building_sets.hpp"
#include "polyfan/checked.hpp"
#include "polyfan/fan.hpp"

namespace polyfan {

// (I, F_1 < ... < F_k < top, J). An empty flag means k = 0.
struct CompatibleTriple {
  Subset i = 0;               // over A
  std::vector<Subset> flag;   // over E, strictly increasing, each proper in top
  Subset top = 0;             // F_{k+1}, disjoint from J
  Subset j = 0;               // over E

  auto operator<=>(const CompatibleTriple&) const = default;
};

// Throws InvalidTriple naming the violated clause.
void validate_triple(const CompatibleTriple& t, const Caging& pi);

// e_i (i in I), -e_{A - pi^-1(F_l)}, -e_{pi^-1(j)} (j in J) in Z^A.
std::vector<IntVector> triple_generators(const CompatibleTriple& t, const Caging& pi);

// Validates the triple and checks the generators span a smooth cone.
Cone triple_cone(const CompatibleTriple& t, const Caging& pi);

// C_J = cone(-e_{pi^-1(j)} | j in J).
Cone j_cone(Subset j, const Caging& pi);

// The triples whose cones are the maximal cones of Delta_{pi,s}, sorted.
std::vector<CompatibleTriple> maximal_triples(const Caging& pi, std::size_t s);

Fan delta_fan(const Caging& pi, std::size_t s);
Fan product_fan(const Caging& pi);
Fan polystellahedral_fan(const Caging& pi);
// Nested fan of the pullback of the boolean building set.
Fan polypermutohedral_fan(const Caging& pi);

enum class OrderPolicy { kDeepestFirst, kIncreasingSize };

// Star-subdivides the product fan along every C_J. Under kIncreasingSize a
// C_J that is no longer a cone throws ConeNotInFan.
Fan blowup_product_fan(const Caging& pi, OrderPolicy policy);

struct Report {
  std::string check;
  std::string instance;
  bool pass = true;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
};

// Delta_{pi,s+1} against Delta_{pi,s} subdivided along the C_J with
// |J| = |E| - s, under `orders` shuffled orders per step, plus the
// check that each maximal cone contains exactly the expected C_J.
Report check_subdivision_chain(const Caging& pi, std::uint64_t seed = 1, std::size_t orders = 2);

// Star of -e_A in the polystellahedral fan against the polypermutohedral
// fan. Throws RayAbsent.
Report check_facet_star(const Caging& pi);

// The splitting of the pullback nested fan by the base nested fan and the
// product of simplex fans of the fibers. Throws NotConnected.
Report check_splitting(const Caging& pi, const BuildingSet& b);

// cone(e_j | j in rho^-1(I - {n})) over A^- = pi^-1([n-1]). I is a bitmask
// over [n]. Throws NonToricLocus when n is not in I.
Cone delta_I_cone(const std::vector<std::size_t>& cage, Subset i);

// The simplex fan over A^- star-subdivided along every delta_I cone with
// n in I, |I| >= 2, largest first. Throws BadCage.
Fan tlm_blowup_fan(const std::vector<std::size_t>& cage);

// The caging A^- -> [n-1] that tlm_blowup_fan is compared against.
Caging tlm_base_caging(const std::vector<std::size_t>& cage);

struct WeightVector {
  std::vector<Rational> w;

  Rational sum(Subset s) const;
  bool in_fm_domain() const;
  bool in_toric_domain() const;
};

struct ToricBuildingIndices {
  std::vector<Subset> indices;  // bitmasks over [n], sorted
  bool losev_manin = false;
};

// {I proper in [n] : |I| >= 2, w_I > 1}. Throws NotInDomain.
ToricBuildingIndices toric_building_indices(const WeightVector& w);

// Refinement of pullback nested fans for pi refining pi_prime. Throws
// NotARefinement.
Report check_refinement_chain(const Caging& pi, const Caging& pi_prime);

// The cones subdivided by check_refinement_chain, in order: for each new
// member G, cone(e_H) over the maximal coarse members H inside G.
std::vector<Cone> refinement_subdivision_cones(const Caging& pi, const Caging& pi_prime);

}  // namespace polyfan

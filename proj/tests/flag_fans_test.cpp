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


#include <doctest.h>

#include "oracles.hpp"
#include "polyfan/flag_fans.hpp"
#include "polyfan/suites.hpp"

using namespace polyfan;

namespace {

ErrorCode code_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInternalInvariant;
}

IntVector v(std::vector<std::int64_t> c) { return IntVector{std::move(c)}; }

}  // namespace

TEST_CASE("triple cones") {
  const Caging pi = Caging::from_cage({2, 1});
  CHECK(j_cone(0b11, pi).generators() == std::vector<IntVector>{v({-1, -1, 0}), v({0, 0, -1})});
  const Cone orthant = triple_cone(CompatibleTriple{0b111, {}, 0b11, 0}, pi);
  CHECK(orthant.generators() == std::vector<IntVector>{v({0, 0, 1}), v({0, 1, 0}), v({1, 0, 0})});

  const Caging line = Caging::from_cage({1, 1});
  const Cone deep = triple_cone(CompatibleTriple{0, {0b00, 0b01}, 0b11, 0}, line);
  CHECK(deep.generators() == std::vector<IntVector>{v({-1, -1}), v({0, -1})});
}

TEST_CASE("invalid triples name the violated clause") {
  const Caging pi = Caging::from_cage({1, 1});
  CHECK(code_of([&] { validate_triple(CompatibleTriple{0b01, {}, 0, 0b01}, pi); }) == ErrorCode::kInvalidTriple);
  CHECK(code_of([&] { validate_triple(CompatibleTriple{0, {0b01}, 0b01, 0}, pi); }) == ErrorCode::kInvalidTriple);
  CHECK(code_of([&] { validate_triple(CompatibleTriple{0b01, {0b10}, 0b11, 0}, pi); }) ==
        ErrorCode::kInvalidTriple);
  CHECK(code_of([&] { validate_triple(CompatibleTriple{0, {}, 0b01, 0b01}, pi); }) == ErrorCode::kInvalidTriple);
}

TEST_CASE("delta fans match the brute-force triple oracle") {
  for (const auto& cage : cages_up_to(4)) {
    const Caging pi = Caging::from_cage(cage);
    for (std::size_t s = 0; s <= cage.size(); ++s) {
      INFO("cage " << pi.cage_str() << " s=" << s);
      const auto expected = oracle::delta_maximal_cones(pi, s);
      CHECK_FALSE(expected.empty());
      CHECK(oracle::maximal_cones(delta_fan(pi, s)) == expected);
    }
  }
}

TEST_CASE("delta fan counts") {
  CHECK(delta_fan(Caging::from_cage({2, 1}), 0).num_maximal_cones() == 6);
  CHECK(delta_fan(Caging::from_cage({1, 1}), 2).num_maximal_cones() == 5);
  CHECK(fan_validate(delta_fan(Caging::from_cage({2, 1}), 1)).all());
  CHECK(polystellahedral_fan(Caging::from_cage({1})).num_maximal_cones() == 2);
  CHECK(code_of([] { maximal_triples(Caging::from_cage({1, 1}), 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("product fans have prod (a_i + 1) maximal cones") {
  for (const auto& cage : cages_up_to(5)) {
    std::size_t expected = 1;
    for (auto a : cage) expected *= a + 1;
    CHECK(product_fan(Caging::from_cage(cage)).num_maximal_cones() == expected);
  }
}

TEST_CASE("polystellahedral cones match polystellahedron vertices") {
  const Caging pi = Caging::from_cage({2, 1});
  const VertexList vertices =
      greedy_vertices(IndependencePolytope(expansion(perm_rank(2), pi), false));
  CHECK(polystellahedral_fan(pi).num_maximal_cones() == vertices.vertices.size());
}

TEST_CASE("the first subdivision step for cage (1,1)") {
  const Caging pi = Caging::from_cage({1, 1});
  const Fan step = star_subdivision(delta_fan(pi, 0), j_cone(0b11, pi));
  CHECK(fan_equal(step, delta_fan(pi, 1)));
  CHECK(step.ray_index(v({-1, -1})).has_value());
}

TEST_CASE("subdivision chains for small cages") {
  for (const auto& cage : cages_up_to(4)) {
    const Report r = check_subdivision_chain(Caging::from_cage(cage), 3);
    INFO(r.instance);
    CHECK(r.pass);
  }
}

TEST_CASE("blow-up of the product fan") {
  CHECK(fan_equal(blowup_product_fan(Caging::from_cage({1, 1}), OrderPolicy::kDeepestFirst),
                  delta_fan(Caging::from_cage({1, 1}), 2)));
  CHECK(fan_equal(blowup_product_fan(Caging::from_cage({2, 1}), OrderPolicy::kDeepestFirst),
                  polystellahedral_fan(Caging::from_cage({2, 1}))));
  CHECK(check_blowup(Caging::from_cage({1, 1}), OrderPolicy::kIncreasingSize).pass);
  CHECK_FALSE(check_blowup(Caging::from_cage({1, 1, 1}), OrderPolicy::kIncreasingSize).pass);
}

TEST_CASE("polypermutohedral fans") {
  const Fan hexagon = polypermutohedral_fan(Caging::from_cage({1, 1, 1}));
  CHECK(hexagon.num_maximal_cones() == 6);
  const Caging pi = Caging::from_cage({2, 1});
  const Fan f = polypermutohedral_fan(pi);
  const AmbientSpace a = f.ambient();
  CHECK(f.rays().size() == 4);
  for (Subset s : {Subset{0b001}, Subset{0b010}, Subset{0b011}, Subset{0b100}}) {
    CHECK(f.ray_index(indicator_vector(s, a)).has_value());
  }
  const Fan point = polypermutohedral_fan(Caging::from_cage({1}));
  CHECK(point.ambient().dim() == 0);
}

TEST_CASE("facet star of the polystellahedral fan") {
  for (const auto& cage : cages_up_to(4)) {
    const Report r = check_facet_star(Caging::from_cage(cage));
    INFO(r.instance);
    CHECK(r.pass);
  }
  const Fan pentagon = polystellahedral_fan(Caging::from_cage({1, 1}));
  CHECK(star_of_ray(pentagon, v({-1, -1})).num_maximal_cones() == 2);
  CHECK(open_star_subfans(pentagon, v({-1, -1})).sigma_double_prime.num_maximal_cones() == 2);
  CHECK(star_of_ray(polystellahedral_fan(Caging::from_cage({1})), v({-1})).ambient().dim() == 0);
}

TEST_CASE("splitting of pulled-back nested fans") {
  const Caging pi = Caging::from_cage({2, 1});
  const Report r = check_splitting(pi, boolean_building_set(pi.target()));
  CHECK(r.pass);
  CHECK(nested_fan(pullback_building_set(boolean_building_set(pi.target()), pi)).num_maximal_cones() == 4);
  const Caging id = Caging::identity(GroundOrder::numbered(3));
  CHECK(check_splitting(id, path_building_set(id.target())).pass);
  const Caging deep = Caging::from_cage({2, 1, 1});
  CHECK(check_splitting(deep, boolean_building_set(deep.target())).pass);
  CHECK(code_of([&] { check_splitting(pi, BuildingSet::validate(GroundOrder::numbered(2), {1, 2})); }) ==
        ErrorCode::kNotConnected);
}

TEST_CASE("delta_I cones") {
  const AmbientSpace two = AmbientSpace::quotient(GroundOrder::numbered(2));
  CHECK(delta_I_cone({1, 1, 1}, 0b101).generators() == std::vector<IntVector>{indicator_vector(0b01, two)});
  const AmbientSpace three = AmbientSpace::quotient(GroundOrder::numbered(3));
  CHECK(delta_I_cone({2, 1, 1}, 0b101).generators() ==
        Cone(three, {indicator_vector(0b001, three), indicator_vector(0b010, three)}).generators());
  CHECK(code_of([] { delta_I_cone({1, 1, 1}, 0b011); }) == ErrorCode::kNonToricLocus);
  CHECK(code_of([] { delta_I_cone({1, 1, 1}, 0b111); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("blown-up simplex fans") {
  CHECK(fan_equal(tlm_blowup_fan({1, 1, 1}), simplex_fan(GroundOrder::numbered(2))));
  CHECK(fan_equal(tlm_blowup_fan({1, 1, 1, 1}), nested_fan(boolean_building_set(GroundOrder::numbered(3)))));
  CHECK(fan_equal(tlm_blowup_fan({2, 1, 1}), polypermutohedral_fan(Caging::from_cage({2, 1}))));
  CHECK(code_of([] { tlm_blowup_fan({3}); }) == ErrorCode::kBadCage);
}

TEST_CASE("toric weight domains") {
  const Rational eps(1, 10);
  const auto lm = toric_building_indices(WeightVector{{eps, eps, eps, Rational(1)}});
  CHECK(lm.losev_manin);
  for (auto i : lm.indices) CHECK((i & 0b1000) != 0);
  CHECK(lm.indices.size() == 6);

  const auto ones = toric_building_indices(WeightVector{{1, 1, 1, 1}});
  CHECK(ones.indices.size() == 10);
  CHECK_FALSE(ones.losev_manin);

  const auto sixes = toric_building_indices(WeightVector{{Rational(3, 5), Rational(3, 5), Rational(3, 5)}});
  CHECK(sixes.indices == std::vector<Subset>{0b011, 0b101, 0b110});

  CHECK(code_of([] { toric_building_indices(WeightVector{{Rational(1, 2), Rational(1, 2)}}); }) ==
        ErrorCode::kNotInDomain);
  CHECK(code_of([] { toric_building_indices(WeightVector{{Rational(2), Rational(1, 2)}}); }) ==
        ErrorCode::kNotInDomain);
}

TEST_CASE("refinement chains") {
  const Caging id = Caging::identity(GroundOrder::numbered(3));
  const Caging coarse = Caging::from_cage({2, 1});
  const Report r = check_refinement_chain(id, coarse);
  CHECK(r.pass);
  CHECK(refinement_subdivision_cones(id, coarse).size() == 2);
  CHECK(refinement_subdivision_cones(coarse, coarse).empty());
  CHECK(check_refinement_chain(coarse, coarse).pass);
  const Caging other(GroundOrder::numbered(3), GroundOrder::numbered(2), {0, 1, 1});
  CHECK(code_of([&] { check_refinement_chain(coarse, other); }) == ErrorCode::kNotARefinement);
}

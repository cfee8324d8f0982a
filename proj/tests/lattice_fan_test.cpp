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

#include <vector>

#include "polyfan/checked.hpp"
#include "polyfan/fan.hpp"
#include "polyfan/lattice.hpp"

using namespace polyfan;

namespace {

IntVector v(std::vector<std::int64_t> c) { return IntVector{std::move(c)}; }

AmbientSpace plane() { return AmbientSpace::full(GroundOrder::numbered(2)); }

Fan p1() {
  return Fan::from_generators(AmbientSpace::full(GroundOrder::numbered(1)), {{v({1})}, {v({-1})}});
}

Fan p2() {
  return Fan::from_generators(plane(), {{v({1, 0}), v({0, 1})}, {v({0, 1}), v({-1, -1})}, {v({-1, -1}), v({1, 0})}});
}

}  // namespace

TEST_CASE("checked arithmetic reports overflow") {
  CHECK_THROWS_AS(checked::mul(INT64_MAX, 2), Error);
  CHECK(checked::add(2, 3) == 5);
  CHECK(checked::gcd(12, -18) == 6);
}

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a = Rational::parse("6/4");
  CHECK(a == Rational(3, 2));
  CHECK(a + Rational(1, 2) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("primitive vectors") {
  const std::vector<std::int64_t> raw{2, 4, 6};
  CHECK(primitive_vector(raw, AmbientSpace::full(GroundOrder::numbered(3))) == v({1, 2, 3}));
  const std::vector<std::int64_t> ones{1, 1, 1};
  try {
    primitive_vector(ones, AmbientSpace::quotient(GroundOrder::numbered(3)));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroVector);
  }
  const std::vector<std::int64_t> two_one_one{2, 1, 1};
  CHECK(primitive_vector(two_one_one, AmbientSpace::quotient(GroundOrder::numbered(3))) == v({1, 0}));
}

TEST_CASE("smoothness by determinant") {
  CHECK(cone_is_smooth(Cone(plane(), {v({1, 0}), v({0, 1})})));
  CHECK_FALSE(cone_is_smooth(Cone(plane(), {v({1, 0}), v({1, 2})})));
  CHECK(determinant({v({1, 0}), v({1, 2})}) == 2);
  const auto factors = smith_invariant_factors({v({1, 0}), v({1, 2})});
  CHECK(factors.back() == 2);
}

TEST_CASE("cones reject dependent or non-primitive generators") {
  CHECK_THROWS_AS(Cone(plane(), {v({1, 0}), v({2, 0})}), Error);
  CHECK_THROWS_AS(Cone(plane(), {v({2, 0})}), Error);
  const Cone c(plane(), {v({1, 0}), v({1, 1})});
  CHECK(c.contains(v({2, 1})));
  CHECK_FALSE(c.contains(v({0, 1})));
  CHECK(c.relint_contains(v({2, 1})));
  CHECK_FALSE(c.relint_contains(v({1, 0})));
}

TEST_CASE("unimodular completion sends the vector to e_0") {
  const IntVector x = v({3, 5, 7});
  const Matrix u = unimodular_completion(x);
  CHECK(apply(u, x) == v({1, 0, 0}));
  std::vector<IntVector> rows;
  for (const auto& r : u) rows.push_back(IntVector{r});
  const auto d = determinant(rows);
  CHECK((d == 1 || d == -1));
}

TEST_CASE("projective line and plane validate") {
  CHECK(fan_validate(p1()).all());
  CHECK(fan_validate(p2()).all());
  CHECK(fan_validate(simplex_fan(GroundOrder::numbered(4))).all());
}

TEST_CASE("overlapping cones are not a fan") {
  const Fan bad = Fan::from_generators(plane(), {{v({1, 0}), v({0, 1})}, {v({1, 0}), v({-1, 2})}});
  const FanReport r = fan_validate(bad);
  CHECK_FALSE(r.is_fan);
  CHECK_FALSE(r.witnesses.empty());
  // The point (1,1) lies in the interior of both cones.
  CHECK(Cone(plane(), {v({1, 0}), v({0, 1})}).relint_contains(v({1, 1})));
  CHECK(Cone(plane(), {v({1, 0}), v({-1, 2})}).relint_contains(v({1, 1})));
}

TEST_CASE("incomplete fans are detected") {
  const Fan half = Fan::from_generators(plane(), {{v({1, 0}), v({0, 1})}, {v({0, 1}), v({-1, 0})}});
  const FanReport r = fan_validate(half);
  CHECK(r.is_fan);
  CHECK_FALSE(r.is_complete);
}

TEST_CASE("blowing up a torus-fixed point of the plane") {
  const Fan blown = star_subdivision(p2(), Cone(plane(), {v({1, 0}), v({0, 1})}));
  CHECK(blown.num_maximal_cones() == 4);
  CHECK(blown.ray_index(v({1, 1})).has_value());
  CHECK(fan_validate(blown).all());
}

TEST_CASE("subdividing along a ray is the identity") {
  CHECK(fan_equal(star_subdivision(p2(), Cone(plane(), {v({1, 0})})), p2()));
}

TEST_CASE("subdividing along a missing cone throws") {
  try {
    star_subdivision(p2(), Cone(plane(), {v({1, 0}), v({-1, 1})}));
    FAIL("expected ConeNotInFan");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConeNotInFan);
  }
}

TEST_CASE("star subdivisions along disjoint cones commute") {
  const AmbientSpace a = AmbientSpace::quotient(GroundOrder::numbered(4));
  const Fan f = simplex_fan(GroundOrder::numbered(4));
  const std::vector<std::int64_t> e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, e4{0, 0, 0, 1};
  const Cone x(a, {canonical_vector(e1, a), canonical_vector(e2, a)});
  const Cone y(a, {canonical_vector(e3, a), canonical_vector(e4, a)});
  const Fan xy = star_subdivision(star_subdivision(f, x), y);
  const Fan yx = star_subdivision(star_subdivision(f, y), x);
  CHECK(fan_equal(xy, yx));
  CHECK(fan_validate(xy).all());
}

TEST_CASE("fan equality is canonical") {
  const Fan permuted(AmbientSpace::full(GroundOrder::numbered(1)), {v({-1}), v({1})}, {{1}, {0}});
  CHECK(fan_equal(p1(), permuted));
  CHECK(fan_equal(p2(), p2()));
  CHECK_THROWS_AS(fan_equal(p1(), p2()), Error);
}

TEST_CASE("hexagon refines the triangle") {
  const GroundOrder g = GroundOrder::numbered(3);
  const AmbientSpace a = AmbientSpace::quotient(g);
  Fan hexagon = simplex_fan(g);
  for (std::uint64_t s : {3U, 5U, 6U}) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < 3; ++i) {
      if (s >> i & 1U) gens.push_back(indicator_vector(std::uint64_t{1} << i, a));
    }
    hexagon = star_subdivision(hexagon, Cone(a, gens));
  }
  CHECK(hexagon.num_maximal_cones() == 6);
  CHECK(fan_refines(hexagon, simplex_fan(g)));
  CHECK_FALSE(fan_refines(simplex_fan(g), hexagon));
  CHECK(fan_refines(hexagon, hexagon));
}

TEST_CASE("star of a ray in the plane is the projective line") {
  const Fan star = star_of_ray(p2(), v({1, 0}));
  CHECK(star.num_maximal_cones() == 2);
  CHECK(fan_validate(star).all());
  CHECK_THROWS_AS(star_of_ray(p2(), v({1, 1})), Error);
}

TEST_CASE("star of the only ray of the projective line is a point") {
  const Fan star = star_of_ray(p1(), v({1}));
  CHECK(star.ambient().dim() == 0);
  CHECK(star.num_maximal_cones() == 1);
}

TEST_CASE("open star subfans of the plane") {
  const OpenStar open = open_star_subfans(p2(), v({1, 0}));
  CHECK(open.sigma_prime.num_maximal_cones() == 2);
  CHECK_FALSE(open.sigma_prime.has_cone(Cone(plane(), {v({0, 1}), v({-1, -1})})));
  CHECK(open.sigma_double_prime.num_maximal_cones() == 2);
  CHECK(open.sigma_double_prime.has_cone(Cone(plane(), {v({0, 1})})));
  CHECK(open.sigma_double_prime.has_cone(Cone(plane(), {v({-1, -1})})));
}

TEST_CASE("open star subfans of the projective line") {
  const OpenStar open = open_star_subfans(p1(), v({1}));
  CHECK(open.sigma_prime.num_maximal_cones() == 1);
  CHECK(open.sigma_double_prime.num_maximal_cones() == 1);
  CHECK(open.sigma_double_prime.maximal_cones().front().empty());
}

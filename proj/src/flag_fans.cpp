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

#include "polyfan/flag_fans.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "polyfan/parallel.hpp"

namespace polyfan {

namespace {

std::vector<std::size_t> elements(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s >> i; ++i) {
    if (s & bit(i)) out.push_back(i);
  }
  return out;
}

// Images theta(S) of all sections theta of pi over S.
std::vector<Subset> section_images(const Caging& pi, Subset s) {
  std::vector<Subset> out{0};
  for (auto e : elements(s)) {
    std::vector<Subset> next;
    for (auto partial : out) {
      for (auto a : elements(pi.fiber(e))) next.push_back(partial | bit(a));
    }
    out = std::move(next);
  }
  return out;
}

// All subsets of s with the given cardinality, in increasing bitmask order.
std::vector<Subset> subsets_of_size(Subset s, std::size_t k) {
  std::vector<Subset> out;
  for (Subset t = s;; t = (t - 1) & s) {
    if (cardinality(t) == k) out.push_back(t);
    if (t == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subset lowest_elements(Subset s, std::size_t k) {
  Subset out = 0;
  for (auto e : elements(s)) {
    if (cardinality(out) == k) break;
    out |= bit(e);
  }
  return out;
}

std::string triple_str(const CompatibleTriple& t, const Caging& pi) {
  std::string s = "(I=" + subset_str(t.i, pi.source()) + ", F=[";
  for (std::size_t l = 0; l < t.flag.size(); ++l) s += (l ? "," : "") + subset_str(t.flag[l], pi.target());
  s += "], top=" + subset_str(t.top, pi.target()) + ", J=" + subset_str(t.j, pi.target()) + ")";
  return s;
}

IntVector signed_indicator(Subset s, std::int64_t sign, const AmbientSpace& ambient) {
  return indicator_vector(s, ambient).scaled(sign);
}

}  // namespace

void validate_triple(const CompatibleTriple& t, const Caging& pi) {
  const Subset all_a = full_subset(pi.source().size());
  const Subset all_e = full_subset(pi.target().size());
  auto bad = [&](const std::string& clause) {
    throw Error(ErrorCode::kInvalidTriple, clause + " in " + triple_str(t, pi));
  };
  if (!is_subset(t.i, all_a)) bad("I is not a subset of A");
  if (!is_subset(t.j, all_e) || !is_subset(t.top, all_e)) bad("J and the top set must lie in E");
  if ((t.top & t.j) != 0) bad("top set meets J");
  for (std::size_t l = 0; l < t.flag.size(); ++l) {
    if (!is_subset(t.flag[l], t.top) || t.flag[l] == t.top) bad("flag member not proper in the top set");
    if (l > 0 && (!is_subset(t.flag[l - 1], t.flag[l]) || t.flag[l - 1] == t.flag[l])) {
      bad("flag not strictly increasing");
    }
  }
  const Subset fib = pi.full_fibers_in(t.i);
  if (!t.flag.empty() && !is_subset(fib, t.flag.front())) bad("a fiber inside I lies outside F_1");
  if (t.flag.empty() && (fib & t.j) != 0) bad("a fiber inside I lies over J");
}

std::vector<IntVector> triple_generators(const CompatibleTriple& t, const Caging& pi) {
  const AmbientSpace ambient = AmbientSpace::full(pi.source());
  const Subset all_a = full_subset(pi.source().size());
  std::vector<IntVector> g;
  for (auto a : elements(t.i)) g.push_back(indicator_vector(bit(a), ambient));
  for (auto f : t.flag) g.push_back(signed_indicator(all_a & ~pi.preimage(f), -1, ambient));
  for (auto e : elements(t.j)) g.push_back(signed_indicator(pi.fiber(e), -1, ambient));
  return g;
}

Cone triple_cone(const CompatibleTriple& t, const Caging& pi) {
  validate_triple(t, pi);
  Cone c(AmbientSpace::full(pi.source()), triple_generators(t, pi));
  if (!cone_is_smooth(c)) {
    throw Error(ErrorCode::kInternalInvariant, "cone of " + triple_str(t, pi) + " is not smooth");
  }
  return c;
}

Cone j_cone(Subset j, const Caging& pi) {
  return triple_cone(CompatibleTriple{0, {}, 0, j}, pi);
}

std::vector<CompatibleTriple> maximal_triples(const Caging& pi, std::size_t s) {
  const std::size_t n = pi.target().size();
  if (s > n) throw Error(ErrorCode::kInvalidArgument, "interpolation index exceeds |E|");
  const Subset all_a = full_subset(pi.source().size());
  const Subset all_e = full_subset(n);
  std::vector<CompatibleTriple> out;

  // Empty flag: J of size at most |E| - s with a section over J.
  for (Subset j = 0; j <= all_e; ++j) {
    if (cardinality(j) + s > n) continue;
    const Subset top = lowest_elements(all_e & ~j, s);
    for (auto image : section_images(pi, j)) out.push_back({all_a & ~image, {}, top, j});
  }

  // Nonempty flag: top = E - J, full chain from F_1, section over E - F_1.
  if (s >= 1) {
    for (auto j : subsets_of_size(all_e, n - s)) {
      const Subset top = all_e & ~j;
      for (Subset f1 = top;; f1 = (f1 - 1) & top) {
        if (f1 != top) {
          auto rest = elements(top & ~f1);
          const auto images = section_images(pi, all_e & ~f1);
          do {
            std::vector<Subset> flag{f1};
            for (std::size_t l = 0; l + 1 < rest.size(); ++l) flag.push_back(flag.back() | bit(rest[l]));
            for (auto image : images) out.push_back({all_a & ~image, flag, top, j});
          } while (std::next_permutation(rest.begin(), rest.end()));
        }
        if (f1 == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fan delta_fan(const Caging& pi, std::size_t s) {
  std::vector<std::vector<IntVector>> cones;
  for (const auto& t : maximal_triples(pi, s)) cones.push_back(triple_cone(t, pi).generators());
  return Fan::from_generators(AmbientSpace::full(pi.source()), cones);
}

Fan product_fan(const Caging& pi) { return delta_fan(pi, 0); }

Fan polystellahedral_fan(const Caging& pi) { return delta_fan(pi, pi.target().size()); }

Fan polypermutohedral_fan(const Caging& pi) {
  return nested_fan(pullback_building_set(boolean_building_set(pi.target()), pi));
}

Fan blowup_product_fan(const Caging& pi, OrderPolicy policy) {
  const Subset all_e = full_subset(pi.target().size());
  std::vector<Subset> js;
  for (Subset j = 1; j <= all_e; ++j) js.push_back(j);
  std::stable_sort(js.begin(), js.end(), [policy](Subset x, Subset y) {
    return policy == OrderPolicy::kDeepestFirst ? cardinality(x) > cardinality(y)
                                                : cardinality(x) < cardinality(y);
  });
  Fan f = product_fan(pi);
  for (auto j : js) f = star_subdivision(f, j_cone(j, pi));
  return f;
}

Report check_subdivision_chain(const Caging& pi, std::uint64_t seed, std::size_t orders) {
  Report report{"subdivision-chain", "cage " + pi.cage_str(), true, {}};
  const std::size_t n = pi.target().size();
  std::vector<Fan> deltas(n + 1);
  parallel_for(n + 1, [&](std::size_t s) { deltas[s] = delta_fan(pi, s); });

  std::vector<Report> steps(n);
  parallel_for(n, [&](std::size_t s) {
    Report& step = steps[s];
    const auto js = subsets_of_size(full_subset(n), n - s);
    std::vector<Cone> j_cones;
    for (auto j : js) j_cones.push_back(j_cone(j, pi));

    for (const auto& t : maximal_triples(pi, s)) {
      const Cone c = triple_cone(t, pi);
      std::vector<Subset> hits;
      for (std::size_t k = 0; k < js.size(); ++k) {
        if (c.contains(j_cones[k])) hits.push_back(js[k]);
      }
      const std::vector<Subset> expected =
          cardinality(t.j) == n - s ? std::vector<Subset>{t.j} : std::vector<Subset>{};
      if (hits != expected) {
        step.fail("s=" + std::to_string(s) + ": " + triple_str(t, pi) + " contains " +
                  std::to_string(hits.size()) + " cone(s) C_J");
      }
    }

    std::mt19937_64 rng(seed * 1000003ULL + s);
    for (std::size_t o = 0; o < orders; ++o) {
      auto order = js;
      std::shuffle(order.begin(), order.end(), rng);
      Fan f = deltas[s];
      std::string trail;
      try {
        for (auto j : order) {
          trail += subset_str(j, pi.target());
          f = star_subdivision(f, j_cone(j, pi));
        }
        if (!fan_equal(f, deltas[s + 1])) {
          step.fail("s=" + std::to_string(s) + ": order " + trail + " does not reach the next fan");
        }
      } catch (const Error& e) {
        step.fail("s=" + std::to_string(s) + ": order " + trail + ": " + e.what());
      }
    }
  });
  for (auto& step : steps) {
    for (auto& w : step.witnesses) report.fail(std::move(w));
  }
  return report;
}

Report check_facet_star(const Caging& pi) {
  Report report{"facet-star", "cage " + pi.cage_str(), true, {}};
  const Fan ps = polystellahedral_fan(pi);
  const std::size_t m = pi.source().size();
  const IntVector rho{std::vector<std::int64_t>(m, -1)};
  if (!ps.ray_index(rho)) {
    throw Error(ErrorCode::kRayAbsent, rho.str() + " is not a ray of the polystellahedral fan");
  }
  const Fan star = star_of_ray(ps, rho);
  const Fan pp = polypermutohedral_fan(pi);
  std::size_t containing = 0;
  const auto r = *ps.ray_index(rho);
  for (const auto& c : ps.maximal_cones()) containing += std::binary_search(c.begin(), c.end(), r);
  if (star.num_maximal_cones() != containing) {
    report.fail("star has " + std::to_string(star.num_maximal_cones()) + " maximal cones but " +
                std::to_string(containing) + " cones contain the ray");
  }
  if (!(star.ambient() == pp.ambient()) || !fan_equal(star, pp)) {
    report.fail("star of " + rho.str() + " differs from the polypermutohedral fan");
  }
  const OpenStar open = open_star_subfans(ps, rho);
  report.witnesses.push_back("sigma_prime maximal cones: " + std::to_string(open.sigma_prime.num_maximal_cones()));
  report.witnesses.push_back("sigma_double_prime maximal cones: " +
                             std::to_string(open.sigma_double_prime.num_maximal_cones()));
  return report;
}

namespace {

// Z^E / Z e_E -> Z^A / Z e_A, e_i -> e_{pi^-1(i)}.
IntVector iota(const IntVector& x, const Caging& pi, const AmbientSpace& source_quotient) {
  std::vector<std::int64_t> raw(pi.source().size());
  for (std::size_t a = 0; a < raw.size(); ++a) {
    const std::size_t e = pi.image(a);
    raw[a] = e < x.size() ? x[e] : 0;
  }
  return canonical_vector(raw, source_quotient);
}

// Z^A / Z e_A -> product over fibers of Z^{A_i} / Z e_{A_i}.
IntVector phi(const IntVector& x, const Caging& pi) {
  IntVector out;
  for (std::size_t e = 0; e < pi.target().size(); ++e) {
    const auto fiber = elements(pi.fiber(e));
    auto value = [&](std::size_t a) { return a < x.size() ? x[a] : std::int64_t{0}; };
    const std::int64_t last = value(fiber.back());
    for (std::size_t k = 0; k + 1 < fiber.size(); ++k) out.coords.push_back(checked::sub(value(fiber[k]), last));
  }
  return out;
}

AmbientSpace fiber_product_ambient(const Caging& pi) {
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < pi.target().size(); ++e) {
    const auto fiber = elements(pi.fiber(e));
    for (std::size_t k = 0; k + 1 < fiber.size(); ++k) labels.push_back(pi.source().label(fiber[k]));
  }
  return AmbientSpace::full(GroundOrder(std::move(labels)));
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Report check_splitting(const Caging& pi, const BuildingSet& b) {
  Report report{"splitting", "cage " + pi.cage_str(), true, {}};
  if (!b.is_connected()) throw Error(ErrorCode::kNotConnected, "building set is not connected");
  const BuildingSet pulled = pullback_building_set(b, pi);
  const Fan base = nested_fan(b);
  const Fan total = nested_fan(pulled);
  const AmbientSpace a_quot = total.ambient();
  const AmbientSpace e_quot = base.ambient();
  const AmbientSpace prod = fiber_product_ambient(pi);
  const std::size_t n = pi.target().size();

  // phi o iota = 0 and iota keeps e_S primitive.
  for (std::size_t e = 0; e < n; ++e) {
    const IntVector image = iota(indicator_vector(bit(e), e_quot), pi, a_quot);
    if (image != indicator_vector(pi.fiber(e), a_quot)) report.fail("iota misplaces e_" + pi.target().label(e));
    if (!phi(image, pi).is_zero()) report.fail("phi o iota is nonzero on e_" + pi.target().label(e));
  }

  // (1) iota carries every cone of the base fan onto a cone of the total fan.
  for (std::size_t c = 0; c < base.num_maximal_cones(); ++c) {
    std::vector<IntVector> g;
    for (const auto& v : base.generators(c)) g.push_back(iota(v, pi, a_quot));
    const bool primitive = std::all_of(g.begin(), g.end(), [](const IntVector& v) { return is_primitive(v); });
    if (!primitive || !total.has_cone(Cone(a_quot, g))) {
      report.fail("iota of base cone " + std::to_string(c) + " is not a cone of the pulled-back fan");
    }
  }

  // (2) phi is a bijection from {sigma_(I,0)} onto the product of simplex fans.
  std::set<std::vector<IntVector>> product_cones;
  {
    std::vector<std::vector<std::size_t>> fibers;
    for (std::size_t e = 0; e < n; ++e) fibers.push_back(elements(pi.fiber(e)));
    // A face of the product is a proper subset of each fiber.
    std::vector<std::vector<Subset>> choices(n);
    for (std::size_t e = 0; e < n; ++e) {
      for (Subset t = 0; t < (Subset{1} << fibers[e].size()) - 1; ++t) {
        Subset chosen = 0;
        for (std::size_t k = 0; k < fibers[e].size(); ++k) {
          if (t & bit(k)) chosen |= bit(fibers[e][k]);
        }
        choices[e].push_back(chosen);
      }
    }
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
      std::vector<IntVector> g;
      for (std::size_t e = 0; e < n; ++e) {
        const auto f = elements(choices[e][pick[e]]);
        const auto& fiber = fibers[e];
        for (auto a : f) {
          // e_a in the quotient of its fiber, placed in the fiber's block.
          IntVector v{std::vector<std::int64_t>(prod.dim(), 0)};
          std::size_t offset = 0;
          for (std::size_t ee = 0; ee < e; ++ee) offset += fibers[ee].size() - 1;
          const std::size_t pos = static_cast<std::size_t>(std::find(fiber.begin(), fiber.end(), a) - fiber.begin());
          if (pos + 1 == fiber.size()) {
            for (std::size_t k = 0; k + 1 < fiber.size(); ++k) v.coords[offset + k] = -1;
          } else {
            v.coords[offset + pos] = 1;
          }
          g.push_back(v);
        }
      }
      product_cones.insert(sorted(std::move(g)));
      std::size_t e = 0;
      while (e < n && ++pick[e] == choices[e].size()) pick[e++] = 0;
      if (e == n) break;
    }
  }
  std::set<std::vector<IntVector>> hat_images;
  std::size_t hat_count = 0;
  const Subset all_a = full_subset(pi.source().size());
  for (Subset i = 0; i < all_a; ++i) {
    if (pi.full_fibers_in(i) != 0) continue;
    ++hat_count;
    const Cone hat = pi_pair_cone(PiPair{i, {}}, pi);
    if (!total.has_cone(hat)) report.fail("sigma_(I,0) for I=" + subset_str(i, pi.source()) + " is not a cone");
    std::vector<IntVector> g;
    for (const auto& v : hat.generators()) g.push_back(phi(v, pi));
    try {
      if (!cone_is_smooth(Cone(prod, g))) report.fail("phi image of I=" + subset_str(i, pi.source()) + " is not smooth");
    } catch (const Error& e) {
      report.fail("phi image of I=" + subset_str(i, pi.source()) + ": " + e.what());
    }
    hat_images.insert(sorted(std::move(g)));
  }
  if (hat_images.size() != hat_count) report.fail("phi is not injective on the cones sigma_(I,0)");
  if (hat_images != product_cones) report.fail("phi does not map onto the product of the fiber fans");

  // (3) every cone is sigma_(I,0) + iota(sigma_N).
  std::set<std::vector<IntVector>> decomposed;
  for (const auto& p : enumerate_pi_pairs(pi, b)) {
    std::vector<IntVector> g = pi_pair_cone(PiPair{p.i, {}}, pi).generators();
    for (auto s : p.n.members) g.push_back(iota(indicator_vector(s, e_quot), pi, a_quot));
    const auto gens = sorted(std::move(g));
    if (gens != pi_pair_cone(p, pi).generators()) report.fail("pi-pair cone does not decompose");
    decomposed.insert(gens);
  }
  for (std::size_t c = 0; c < total.num_maximal_cones(); ++c) {
    if (!decomposed.count(total.generators(c))) {
      report.fail("maximal cone " + std::to_string(c) + " has no decomposition");
    }
  }

  if (b == boolean_building_set(b.ground())) {
    std::size_t product_max = 1;
    for (auto a : pi.cage()) product_max *= a;
    const std::size_t expected = product_max * base.num_maximal_cones();
    report.witnesses.push_back("maximal cones: " + std::to_string(total.num_maximal_cones()) + " = " +
                               std::to_string(product_max) + " * " + std::to_string(base.num_maximal_cones()));
    if (total.num_maximal_cones() != expected) report.fail("maximal-cone count is not the product");
  }
  return report;
}

Caging tlm_base_caging(const std::vector<std::size_t>& cage) {
  if (cage.size() < 2) throw Error(ErrorCode::kBadCage, "the blow-up construction needs n >= 2");
  return Caging::from_cage(std::vector<std::size_t>(cage.begin(), cage.end() - 1));
}

Cone delta_I_cone(const std::vector<std::size_t>& cage, Subset i) {
  const Caging rho = tlm_base_caging(cage);
  const std::size_t n = cage.size();
  if (!(i & bit(n - 1))) throw Error(ErrorCode::kNonToricLocus, "the index set does not contain n");
  if (cardinality(i) < 2 || !is_subset(i, full_subset(n)) || i == full_subset(n)) {
    throw Error(ErrorCode::kInvalidArgument, "index set must be proper with at least two elements");
  }
  const Subset below = rho.preimage(i & ~bit(n - 1));
  return coordinate_cone(below, AmbientSpace::quotient(rho.source()));
}

Fan tlm_blowup_fan(const std::vector<std::size_t>& cage) {
  const Caging rho = tlm_base_caging(cage);
  const std::size_t n = cage.size();
  std::vector<Subset> loci;
  for (Subset i = 0; i < full_subset(n); ++i) {
    if ((i & bit(n - 1)) && cardinality(i) >= 2) loci.push_back(i);
  }
  std::stable_sort(loci.begin(), loci.end(),
                   [](Subset x, Subset y) { return cardinality(x) > cardinality(y); });
  Fan f = simplex_fan(rho.source());
  for (auto i : loci) f = star_subdivision(f, delta_I_cone(cage, i));
  return f;
}

Rational WeightVector::sum(Subset s) const {
  Rational total;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (s & bit(i)) total += w[i];
  }
  return total;
}

bool WeightVector::in_fm_domain() const {
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x > Rational(0) && x <= Rational(1); });
}

bool WeightVector::in_toric_domain() const {
  return in_fm_domain() && sum(full_subset(w.size())) > Rational(1);
}

ToricBuildingIndices toric_building_indices(const WeightVector& w) {
  if (!w.in_toric_domain()) throw Error(ErrorCode::kNotInDomain, "weights are outside the admissible domain");
  const std::size_t n = w.w.size();
  ToricBuildingIndices out;
  for (Subset i = 1; i < full_subset(n); ++i) {
    if (cardinality(i) >= 2 && w.sum(i) > Rational(1)) out.indices.push_back(i);
  }
  out.losev_manin = w.sum(full_subset(n - 1)) <= Rational(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w.w[i] + w.w[n - 1] <= Rational(1)) out.losev_manin = false;
  }
  if (out.losev_manin) {
    for (auto i : out.indices) {
      if (!(i & bit(n - 1))) throw Error(ErrorCode::kInternalInvariant, "toric index set misses n");
    }
  }
  return out;
}

std::vector<Cone> refinement_subdivision_cones(const Caging& pi, const Caging& pi_prime) {
  if (!pi.refines(pi_prime)) throw Error(ErrorCode::kNotARefinement, "the first caging does not refine the second");
  const BuildingSet fine = pullback_building_set(boolean_building_set(pi.target()), pi);
  const BuildingSet coarse = pullback_building_set(boolean_building_set(pi_prime.target()), pi_prime);
  std::vector<Subset> added;
  for (auto g : fine.members()) {
    if (!coarse.contains(g)) added.push_back(g);
  }
  std::stable_sort(added.begin(), added.end(),
                   [](Subset x, Subset y) { return cardinality(x) > cardinality(y); });
  const AmbientSpace ambient = AmbientSpace::quotient(pi.source());
  std::vector<Cone> out;
  for (auto g : added) {
    std::vector<IntVector> gens;
    for (auto h : coarse.members()) {
      if (!is_subset(h, g)) continue;
      const bool maximal = std::none_of(coarse.members().begin(), coarse.members().end(), [&](Subset k) {
        return k != h && is_subset(h, k) && is_subset(k, g);
      });
      if (maximal) gens.push_back(indicator_vector(h, ambient));
    }
    out.emplace_back(ambient, std::move(gens));
  }
  return out;
}

Report check_refinement_chain(const Caging& pi, const Caging& pi_prime) {
  Report report{"refinement", "cage " + pi.cage_str() + " over " + pi_prime.cage_str(), true, {}};
  const auto cones = refinement_subdivision_cones(pi, pi_prime);
  const BuildingSet fine = pullback_building_set(boolean_building_set(pi.target()), pi);
  const BuildingSet coarse = pullback_building_set(boolean_building_set(pi_prime.target()), pi_prime);
  for (auto h : coarse.members()) {
    if (!fine.contains(h)) report.fail("coarse member " + subset_str(h, pi.source()) + " is missing upstairs");
  }
  const Fan fine_fan = nested_fan(fine);
  const Fan coarse_fan = nested_fan(coarse);
  if (!fan_refines(fine_fan, coarse_fan)) report.fail("fine fan does not refine the coarse fan");
  Fan f = coarse_fan;
  try {
    for (const auto& c : cones) f = star_subdivision(f, c);
    if (!fan_equal(f, fine_fan)) report.fail("subdivision chain does not reach the fine fan");
  } catch (const Error& e) {
    report.fail(e.what());
  }
  report.witnesses.push_back("star subdivisions: " + std::to_string(cones.size()));
  return report;
}

}  // namespace polyfan

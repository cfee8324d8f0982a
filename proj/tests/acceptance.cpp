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


// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "polyfan/normal_fan.hpp"
#include "polyfan/parallel.hpp"
#include "polyfan/suites.hpp"

using namespace polyfan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// First failing reports, for the detail line.
Outcome summarize(const std::vector<Report>& reports, const std::string& what) {
  Outcome out;
  std::size_t failed = 0;
  std::ostringstream first;
  for (const auto& r : reports) {
    if (r.pass) continue;
    if (failed++ == 0) {
      first << "; first failure " << r.check << " " << r.instance;
      if (!r.witnesses.empty()) first << ": " << r.witnesses.front();
    }
  }
  out.pass = failed == 0 && !reports.empty();
  out.detail = std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " " + what + first.str();
  return out;
}

std::vector<Report> each_cage(std::size_t max_a, const std::function<std::vector<Report>(const Caging&)>& check) {
  const auto cages = cages_up_to(max_a);
  std::vector<std::vector<Report>> parts(cages.size());
  parallel_for(cages.size(), [&](std::size_t k) { parts[k] = check(Caging::from_cage(cages[k])); });
  std::vector<Report> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Every connected building set on {1..n}.
std::vector<BuildingSet> connected_building_sets(std::size_t n) {
  std::vector<Subset> candidates;
  for (Subset s = 1; s <= full_subset(n); ++s) {
    if (cardinality(s) >= 2) candidates.push_back(s);
  }
  std::vector<BuildingSet> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
    std::vector<Subset> members;
    for (std::size_t i = 0; i < n; ++i) members.push_back(bit(i));
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (pick & (std::uint64_t{1} << k)) members.push_back(candidates[k]);
    }
    if (n > 1 && std::find(members.begin(), members.end(), full_subset(n)) == members.end()) continue;
    try {
      out.push_back(BuildingSet::validate(GroundOrder::numbered(n), members));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnionViolation) throw;
    }
  }
  return out;
}

Outcome criterion_validity() {
  const auto start = std::chrono::steady_clock::now();
  auto reports = each_cage(5, [](const Caging& pi) { return std::vector<Report>{check_delta_validity(pi)}; });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome out = summarize(reports, "cagings with every delta fan valid");
  char timing[64];
  std::snprintf(timing, sizeof timing, ", %.2f s", seconds);
  out.detail += timing;
  if (seconds >= 60.0) {
    out.pass = false;
    out.detail += " exceeds 60 s";
  }
  return out;
}

Outcome criterion_subdivision_chain() {
  return summarize(each_cage(5, [](const Caging& pi) { return std::vector<Report>{check_subdivision_chain(pi, 1, 2)}; }),
                   "cagings, 2 shuffled orders per step");
}

Outcome criterion_blowup() {
  Outcome out = summarize(
      each_cage(5, [](const Caging& pi) { return std::vector<Report>{check_blowup(pi, OrderPolicy::kDeepestFirst)}; }),
      "cagings, deepest first");
  const auto literal =
      summarize(each_cage(5, [](const Caging& pi) { return std::vector<Report>{check_blowup(pi, OrderPolicy::kIncreasingSize)}; }),
                "");
  out.detail += " (increasing |J|: " + literal.detail.substr(0, literal.detail.find(' ')) + " agree)";
  return out;
}

Outcome criterion_base_normal_fan() {
  return summarize(each_cage(5, [](const Caging& pi) { return check_normal_fans(pi, false); }),
                   "polypermutohedral fans against base polytopes");
}

Outcome criterion_independence_normal_fan() {
  return summarize(each_cage(4,
                             [](const Caging& pi) {
                               auto r = check_normal_fans(pi, true);
                               return std::vector<Report>{r.back()};
                             }),
                   "polystellahedral fans against independence polytopes");
}

Outcome criterion_quotient() {
  Outcome out = summarize(each_cage(5, [](const Caging& pi) { return std::vector<Report>{check_facet_star(pi)}; }),
                          "cagings with star of -e_A equal to the polypermutohedral fan");
  const std::size_t pentagon_star =
      star_of_ray(polystellahedral_fan(Caging::from_cage({1, 1})), IntVector{{-1, -1}}).num_maximal_cones();
  out.detail += "; pentagon star has " + std::to_string(pentagon_star) + " cones";
  if (pentagon_star != 2) out.pass = false;
  return out;
}

Outcome criterion_tlm() {
  SuiteOptions options;
  options.max_a = 5;
  return summarize(run_suite("tlm", options), "cages with a_1 + ... + a_{n-1} <= 5");
}

Outcome criterion_splitting() {
  Outcome out = summarize(each_cage(5, [](const Caging& pi) { return run_suite_on("splitting", pi, SuiteOptions{}); }),
                          "boolean, path and star splittings");
  std::size_t mismatched = 0;
  for (const auto& cage : cages_up_to(5)) {
    const Caging pi = Caging::from_cage(cage);
    const BuildingSet b = boolean_building_set(pi.target());
    std::size_t fiber_product = 1;
    for (std::size_t e = 0; e < pi.target().size(); ++e) {
      fiber_product *= simplex_fan(GroundOrder::numbered(cardinality(pi.fiber(e)))).num_maximal_cones();
    }
    const std::size_t total = nested_fan(pullback_building_set(b, pi)).num_maximal_cones();
    if (total != fiber_product * nested_fan(b).num_maximal_cones()) ++mismatched;
  }
  out.detail += "; count identity fails on " + std::to_string(mismatched) + " cages";
  if (mismatched) out.pass = false;
  return out;
}

Outcome criterion_refinement() {
  SuiteOptions options;
  options.max_a = 5;
  Outcome out = summarize(run_suite("refinement", options), "refining pairs of set partitions");
  std::vector<Report> chains;
  for (const auto& cage : cages_up_to(5)) {
    const Caging pi = Caging::from_cage(cage);
    chains.push_back(check_refinement_chain(Caging::identity(pi.source()), pi));
  }
  const Outcome identity = summarize(chains, "");
  out.detail += "; identity over each cage: " + identity.detail.substr(0, identity.detail.find(' '));
  out.pass = out.pass && identity.pass;
  return out;
}

Outcome criterion_counts() {
  Outcome out;
  auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
    if (got != want) {
      out.pass = false;
      out.detail += what + " " + std::to_string(got) + " != " + std::to_string(want) + "; ";
    }
  };
  expect("pentagon", delta_fan(Caging::from_cage({1, 1}), 2).num_maximal_cones(), 5);
  expect("hexagon", polypermutohedral_fan(Caging::from_cage({1, 1, 1})).num_maximal_cones(), 6);
  const Fan pp = polypermutohedral_fan(Caging::from_cage({2, 1}));
  expect("cage (2,1) cones", pp.num_maximal_cones(), 4);
  expect("cage (2,1) rays", pp.rays().size(), 4);
  std::size_t products = 0;
  for (const auto& cage : cages_up_to(5)) {
    std::size_t want = 1;
    for (auto a : cage) want *= a + 1;
    expect("product " + Caging::from_cage(cage).cage_str(), product_fan(Caging::from_cage(cage)).num_maximal_cones(),
           want);
    ++products;
  }
  if (out.pass) out.detail = "pentagon 5, hexagon 6, cage (2,1) 4 cones and 4 rays, " + std::to_string(products) +
                             " product fans";
  return out;
}

Outcome criterion_polymatroids() {
  std::vector<RankFunction> ranks;
  for (const auto& cage : cages_up_to(4)) ranks.push_back(expansion(perm_rank(cage.size()), Caging::from_cage(cage)));
  for (std::uint64_t seed = 0; seed < 100; ++seed) ranks.push_back(random_polymatroid(1 + seed % 4, seed));
  std::vector<Report> reports;
  for (const auto& f : ranks) {
    Report r{"polymatroid", "rank on " + std::to_string(f.size()) + " elements", true, {}};
    const IndependencePolytope p(f, false);
    if (!(recover_rank(p) == f)) r.fail("rank recovery differs");
    const auto c = check_independence_characterization(lattice_points(p), p.box());
    if (!c.pass()) r.fail(c.witnesses.empty() ? "characterization fails" : c.witnesses.front());
    reports.push_back(std::move(r));
  }
  return summarize(reports, "rank functions (perm_rank expansions and 100 random)");
}

Outcome criterion_nested_equivalence() {
  std::vector<Report> reports;
  std::size_t sets = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto family = connected_building_sets(n);
    sets += family.size();
    for (const auto& b : family) {
      Report r{"nested", "building set on " + std::to_string(n) + " elements", true, {}};
      if (!fan_equal(nested_fan(b), nested_fan_by_subdivision(b))) r.fail("fans differ");
      reports.push_back(std::move(r));
    }
    for (const auto& cage : cages_up_to(5)) {
      if (cage.size() != n) continue;
      const Caging pi = Caging::from_cage(cage);
      for (const auto& b : family) {
        const BuildingSet pulled = pullback_building_set(b, pi);
        Report r{"nested", "pullback along cage " + pi.cage_str(), true, {}};
        if (!fan_equal(nested_fan(pulled), nested_fan_by_subdivision(pulled))) r.fail("fans differ");
        reports.push_back(std::move(r));
      }
    }
  }
  Outcome out = summarize(reports, "building sets and pullbacks");
  out.detail += " (" + std::to_string(sets) + " connected building sets on at most 4 elements)";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fan validity of every delta fan, |A| <= 5", criterion_validity},
      {"subdivision chain, |A| <= 5", criterion_subdivision_chain},
      {"blow-up of the product fan, |A| <= 5", criterion_blowup},
      {"polypermutohedral normal fan, |A| <= 5", criterion_base_normal_fan},
      {"polystellahedral normal fan, |A| <= 4", criterion_independence_normal_fan},
      {"quotient by the distinguished ray, |A| <= 5", criterion_quotient},
      {"blown-up simplex fan, a_1 + ... + a_{n-1} <= 5", criterion_tlm},
      {"splitting of pulled-back nested fans, |A| <= 5", criterion_splitting},
      {"refinement chains, |A| <= 5", criterion_refinement},
      {"counting fixtures", criterion_counts},
      {"polymatroid round-trips, |E| <= 4", criterion_polymatroids},
      {"nested fan against iterated subdivision", criterion_nested_equivalence},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("threw ") + e.what()};
    }
    failed += !out.pass;
    std::cout << (out.pass ? "PASS " : "FAIL ") << "criterion " << k + 1 << ": " << criteria[k].first << " -- "
              << out.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

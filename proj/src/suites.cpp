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


#include "polyfan/suites.hpp"

#include <algorithm>
#include <functional>

#include "polyfan/normal_fan.hpp"
#include "polyfan/parallel.hpp"

namespace polyfan {

std::vector<std::vector<std::size_t>> cages_up_to(std::size_t max_a) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = 1; a <= remaining; ++a) {
      current.push_back(a);
      extend(remaining - a);
      current.pop_back();
    }
  };
  for (std::size_t total = 1; total <= max_a; ++total) extend(total);
  return out;
}

std::vector<Caging> set_partition_cagings(std::size_t n) {
  std::vector<Caging> out;
  // Restricted growth strings: block[i] <= 1 + max(block[0..i)).
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      out.emplace_back(GroundOrder::numbered(n), GroundOrder::numbered(blocks), block);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block[i] = b;
      extend(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) extend(0, 0);
  return out;
}

std::string partition_str(const Caging& pi) {
  std::string s;
  for (std::size_t e = 0; e < pi.target().size(); ++e) s += subset_str(pi.fiber(e), pi.source());
  return s;
}

BuildingSet path_building_set(const GroundOrder& ground) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < ground.size(); ++i) edges.emplace_back(i, i + 1);
  return graphical_building_set(ground, edges);
}

BuildingSet star_building_set(const GroundOrder& ground) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < ground.size(); ++i) edges.emplace_back(0, i);
  return graphical_building_set(ground, edges);
}

Report check_delta_validity(const Caging& pi) {
  Report report{"validity", "cage " + pi.cage_str(), true, {}};
  for (std::size_t s = 0; s <= pi.target().size(); ++s) {
    const Fan f = delta_fan(pi, s);
    const FanReport r = fan_validate(f);
    if (!r.all()) {
      report.fail("s=" + std::to_string(s) + ": is_fan=" + std::to_string(r.is_fan) +
                  " is_simplicial=" + std::to_string(r.is_simplicial) + " is_smooth=" + std::to_string(r.is_smooth) +
                  " is_complete=" + std::to_string(r.is_complete));
      for (const auto& w : r.witnesses) report.witnesses.push_back("s=" + std::to_string(s) + ": " + w);
    }
  }
  return report;
}

Report check_blowup(const Caging& pi, OrderPolicy policy) {
  Report report{policy == OrderPolicy::kDeepestFirst ? "blowup" : "blowup-increasing-size", "cage " + pi.cage_str(),
                true, {}};
  try {
    if (!fan_equal(blowup_product_fan(pi, policy), polystellahedral_fan(pi))) {
      report.fail("blown-up product fan differs from the polystellahedral fan");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kConeNotInFan) throw;
    report.fail(e.what());
  }
  return report;
}

std::vector<Report> check_normal_fans(const Caging& pi, bool independence) {
  const RankFunction f = expansion(perm_rank(pi.target().size()), pi);
  std::vector<Report> out;
  Report base = check_inner_normal_fan(polypermutohedral_fan(pi), IndependencePolytope(f, true));
  base.instance = "polypermutohedral cage " + pi.cage_str();
  out.push_back(std::move(base));
  if (independence) {
    Report ind = check_inner_normal_fan(polystellahedral_fan(pi), IndependencePolytope(f, false));
    ind.instance = "polystellahedral cage " + pi.cage_str();
    out.push_back(std::move(ind));
  }
  return out;
}

Report check_tlm(const std::vector<std::size_t>& cage) {
  const Caging base = tlm_base_caging(cage);
  std::string name;
  for (auto a : cage) name += (name.empty() ? "" : ",") + std::to_string(a);
  Report report{"tlm", "cage " + name, true, {}};
  const Fan blown = tlm_blowup_fan(cage);
  const Fan expected = polypermutohedral_fan(base);
  if (!fan_equal(blown, expected)) {
    report.fail("blow-up has " + std::to_string(blown.num_maximal_cones()) + " maximal cones, expected fan has " +
                std::to_string(expected.num_maximal_cones()));
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"validity", "subdivision-chain", "blowup", "facet-star",
                                              "splitting", "normal-fan", "tlm", "refinement"};
  return names;
}

std::vector<Report> run_suite_on(const std::string& name, const Caging& pi, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite_on(n, pi, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "validity") return {check_delta_validity(pi)};
  if (name == "subdivision-chain") return {check_subdivision_chain(pi, options.seed)};
  if (name == "blowup") return {check_blowup(pi, options.policy)};
  if (name == "facet-star") return {check_facet_star(pi)};
  if (name == "splitting") {
    return {check_splitting(pi, boolean_building_set(pi.target())),
            check_splitting(pi, path_building_set(pi.target())), check_splitting(pi, star_building_set(pi.target()))};
  }
  if (name == "normal-fan") return check_normal_fans(pi, pi.source().size() <= options.max_a_independence);
  if (name == "tlm") {
    if (pi.target().size() < 2) return {};
    return {check_tlm(pi.cage())};
  }
  if (name == "refinement") {
    std::vector<Report> out;
    for (const auto& coarse : set_partition_cagings(pi.source().size())) {
      if (!pi.refines(coarse)) continue;
      Report r = check_refinement_chain(pi, coarse);
      r.instance = partition_str(pi) + " over " + partition_str(coarse);
      out.push_back(std::move(r));
    }
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + name + "'");
}

std::vector<Report> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  std::vector<Caging> instances;
  if (name == "tlm") {
    // The blow-up lives over a_1 + ... + a_{n-1} <= max_a and ignores a_n.
    for (auto cage : cages_up_to(options.max_a)) {
      for (std::size_t last : {1, 2}) {
        cage.push_back(last);
        instances.push_back(Caging::from_cage(cage));
        cage.pop_back();
      }
    }
  } else if (name == "refinement") {
    for (std::size_t n = 1; n <= options.max_a; ++n) {
      for (auto& pi : set_partition_cagings(n)) instances.push_back(std::move(pi));
    }
  } else {
    for (const auto& cage : cages_up_to(options.max_a)) instances.push_back(Caging::from_cage(cage));
  }
  std::vector<std::vector<Report>> results(instances.size());
  parallel_for(instances.size(), [&](std::size_t k) { results[k] = run_suite_on(name, instances[k], options); });
  std::vector<Report> out;
  for (auto& part : results) {
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace polyfan

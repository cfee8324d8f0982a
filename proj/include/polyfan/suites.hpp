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


// Verification sweeps over families of cagings, shared by the command-line
// tool and the acceptance runner.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyfan/flag_fans.hpp"

namespace polyfan {

// Every cage (a_1, ..., a_n) with a_1 + ... + a_n <= max_a, by total and
// then lexicographically.
std::vector<std::vector<std::size_t>> cages_up_to(std::size_t max_a);

// One caging per set partition of {1..n}; fibers are ordered by their least
// element.
std::vector<Caging> set_partition_cagings(std::size_t n);

// Fibers as label sets, e.g. "{1,3}{2}".
std::string partition_str(const Caging& pi);

BuildingSet path_building_set(const GroundOrder& ground);
BuildingSet star_building_set(const GroundOrder& ground);

// is_fan, is_simplicial, is_smooth and is_complete for every delta fan.
Report check_delta_validity(const Caging& pi);

// The blow-up of the product fan under `policy` against the polystellahedral
// fan. A ConeNotInFan during the blow-up is reported as a failure.
Report check_blowup(const Caging& pi, OrderPolicy policy);

// Polypermutohedral fan against the base polytope and, when `independence`
// is set, polystellahedral fan against the independence polytope of the
// expanded permutohedral rank function.
std::vector<Report> check_normal_fans(const Caging& pi, bool independence);

// The blown-up simplex fan against the polypermutohedral fan of the base
// caging.
Report check_tlm(const std::vector<std::size_t>& cage);

struct SuiteOptions {
  std::size_t max_a = 4;
  std::size_t max_a_independence = 4;
  OrderPolicy policy = OrderPolicy::kDeepestFirst;
  std::uint64_t seed = 1;
};

// Names: validity, subdivision-chain, blowup, facet-star, splitting,
// normal-fan, tlm, refinement. "all" runs every suite. Throws
// InvalidArgument for an unknown name.
std::vector<Report> run_suite(const std::string& name, const SuiteOptions& options);

// The suites run for a single caging.
std::vector<Report> run_suite_on(const std::string& name, const Caging& pi, const SuiteOptions& options);

const std::vector<std::string>& suite_names();

}  // namespace polyfan

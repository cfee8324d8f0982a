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


// JSON encodings of fans, building sets, cagings, rank functions, polytopes
// and reports. Writers are byte-deterministic; readers throw Parse.

#pragma once

#include <string>

#include "polyfan/building_sets.hpp"
#include "polyfan/fan.hpp"
#include "polyfan/flag_fans.hpp"
#include "polyfan/polymatroid.hpp"

namespace polyfan::io {

std::string fan_to_json(const Fan& f);
Fan fan_from_json(const std::string& text);

std::string building_set_to_json(const BuildingSet& b);
BuildingSet building_set_from_json(const std::string& text);

std::string caging_to_json(const Caging& pi);
Caging caging_from_json(const std::string& text);

// Keys are comma-joined labels in ground order, "" for the empty set.
std::string rank_to_json(const RankFunction& f);
RankFunction rank_from_json(const std::string& text);

std::string h_rep_to_json(const IndependencePolytope& p);
std::string vertices_to_json(const VertexList& v, const GroundOrder& ground);

std::string report_to_json(const Report& r);
std::string reports_to_json(const std::vector<Report>& reports);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace polyfan::io

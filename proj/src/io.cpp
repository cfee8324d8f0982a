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


#include "polyfan/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyfan::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

// Runs a field extraction, turning JSON type errors into Parse errors.
template <typename F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json labels_of(Subset s, const GroundOrder& ground) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (s & bit(i)) out.push_back(ground.label(i));
  }
  return out;
}

Subset subset_of(const Json& labels, const GroundOrder& ground) {
  Subset s = 0;
  for (const auto& l : labels) {
    const auto i = ground.index(l.get<std::string>());
    if (!i) throw Error(ErrorCode::kParse, "unknown label " + l.get<std::string>());
    s |= bit(*i);
  }
  return s;
}

std::string subset_key(Subset s, const GroundOrder& ground) {
  std::string key;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (s & bit(i)) key += (key.empty() ? "" : ",") + ground.label(i);
  }
  return key;
}

GroundOrder ground_of(const Json& j) { return GroundOrder(j.get<std::vector<std::string>>()); }

Json inequality_json(const Inequality& q) { return Json{{"coeffs", q.coeffs}, {"bound", q.bound}}; }

}  // namespace

std::string fan_to_json(const Fan& f) {
  Json j;
  j["ambient"] = {{"ground", f.ambient().ground().labels()}, {"quotient_by_all_ones", f.ambient().is_quotient()}};
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(r.coords);
  j["rays"] = rays;
  j["maximal_cones"] = f.maximal_cones();
  return dump(j);
}

Fan fan_from_json(const std::string& text) {
  const Json j = parse(text);
  return guarded([&] {
    const GroundOrder ground = ground_of(j.at("ambient").at("ground"));
    const bool quotient = j.at("ambient").at("quotient_by_all_ones").get<bool>();
    const AmbientSpace ambient(ground, quotient ? AmbientMode::kQuotientByAllOnes : AmbientMode::kFull);
    std::vector<IntVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(IntVector{r.get<std::vector<std::int64_t>>()});
    auto cones = j.at("maximal_cones").get<std::vector<RayIndices>>();
    for (const auto& c : cones) {
      for (auto k : c) {
        if (k >= rays.size()) throw Error(ErrorCode::kParse, "ray index out of range");
      }
    }
    return Fan(ambient, std::move(rays), std::move(cones));
  });
}

std::string building_set_to_json(const BuildingSet& b) {
  Json members = Json::array();
  for (auto s : b.members()) members.push_back(labels_of(s, b.ground()));
  return dump(Json{{"ground", b.ground().labels()}, {"members", members}});
}

BuildingSet building_set_from_json(const std::string& text) {
  const Json j = parse(text);
  return guarded([&] {
    const GroundOrder ground = ground_of(j.at("ground"));
    std::vector<Subset> members;
    for (const auto& m : j.at("members")) members.push_back(subset_of(m, ground));
    return BuildingSet::validate(ground, std::move(members));
  });
}

std::string caging_to_json(const Caging& pi) {
  Json map = Json::object();
  for (std::size_t a = 0; a < pi.source().size(); ++a) map[pi.source().label(a)] = pi.target().label(pi.image(a));
  return dump(Json{{"source", pi.source().labels()}, {"target", pi.target().labels()}, {"map", map}});
}

Caging caging_from_json(const std::string& text) {
  const Json j = parse(text);
  return guarded([&] {
    const GroundOrder source = ground_of(j.at("source"));
    const GroundOrder target = ground_of(j.at("target"));
    std::vector<std::size_t> map;
    for (const auto& a : source.labels()) {
      const auto e = target.index(j.at("map").at(a).get<std::string>());
      if (!e) throw Error(ErrorCode::kParse, "caging maps " + a + " outside the target");
      map.push_back(*e);
    }
    return Caging(source, target, std::move(map));
  });
}

std::string rank_to_json(const RankFunction& f) {
  Json values = Json::object();
  for (Subset s = 0; s < f.table().size(); ++s) values[subset_key(s, f.ground())] = f(s);
  return dump(Json{{"ground", f.ground().labels()}, {"values", values}});
}

RankFunction rank_from_json(const std::string& text) {
  const Json j = parse(text);
  return guarded([&] {
    const GroundOrder ground = ground_of(j.at("ground"));
    if (ground.size() > 20) throw Error(ErrorCode::kParse, "ground set too large");
    const Subset count = Subset{1} << ground.size();
    std::vector<std::int64_t> table(count);
    std::vector<bool> seen(count, false);
    for (const auto& [key, value] : j.at("values").items()) {
      Subset s = 0;
      std::stringstream in(key);
      for (std::string label; std::getline(in, label, ',');) {
        const auto i = ground.index(label);
        if (!i) throw Error(ErrorCode::kParse, "unknown label " + label);
        s |= bit(*i);
      }
      table[s] = value.get<std::int64_t>();
      seen[s] = true;
    }
    for (Subset s = 0; s < count; ++s) {
      if (!seen[s]) throw Error(ErrorCode::kParse, "missing value for {" + subset_key(s, ground) + "}");
    }
    return RankFunction::validate(ground, std::move(table));
  });
}

std::string h_rep_to_json(const IndependencePolytope& p) {
  Json ineq = Json::array();
  for (const auto& q : p.inequalities()) ineq.push_back(inequality_json(q));
  Json eq = Json::array();
  for (const auto& q : p.equalities()) eq.push_back(inequality_json(q));
  return dump(Json{{"ground", p.rank().ground().labels()}, {"inequalities", ineq}, {"equalities", eq}});
}

std::string vertices_to_json(const VertexList& v, const GroundOrder& ground) {
  Json list = Json::array();
  for (const auto& x : v.vertices) list.push_back(x.coords);
  return dump(Json{{"ground", ground.labels()}, {"vertices", list}, {"complete", v.complete}});
}

namespace {

Json report_json(const Report& r) {
  return Json{{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}, {"witnesses", r.witnesses}};
}

}  // namespace

std::string report_to_json(const Report& r) { return dump(report_json(r)); }

std::string reports_to_json(const std::vector<Report>& reports) {
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_json(r));
  return dump(list);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
}

}  // namespace polyfan::io

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


#include "polyfan/normal_fan.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "polyfan/parallel.hpp"

namespace polyfan {

MinimizationResult min_face(const IntVector& w, const VertexList& vertices) {
  if (vertices.vertices.empty()) throw Error(ErrorCode::kEmptyVertexList, "no vertices to minimize over");
  const std::size_t n = vertices.vertices.front().size();
  IntVector lifted = w;
  if (lifted.size() + 1 == n) {
    lifted.coords.push_back(0);
  } else if (lifted.size() != n) {
    throw Error(ErrorCode::kAmbientMismatch, "direction " + w.str() + " does not fit the vertices");
  }
  MinimizationResult out{w, 0, {}};
  for (std::size_t k = 0; k < vertices.vertices.size(); ++k) {
    const std::int64_t value = lifted.dot(vertices.vertices[k]);
    if (out.optimal_face.empty() || value < out.optimal_value) {
      out.optimal_value = value;
      out.optimal_face = {k};
    } else if (value == out.optimal_value) {
      out.optimal_face.push_back(k);
    }
  }
  return out;
}

Report check_inner_normal_fan(const Fan& f, const IndependencePolytope& p) {
  const AmbientSpace expected(p.rank().ground(),
                              p.base_mode() ? AmbientMode::kQuotientByAllOnes : AmbientMode::kFull);
  if (!(f.ambient() == expected)) {
    throw Error(ErrorCode::kAmbientMismatch, "fan ambient does not match the polytope");
  }
  const VertexList vertices = greedy_vertices(p);
  Report report{"normal-fan", std::string(p.base_mode() ? "base" : "independence") + " polytope on " +
                                  std::to_string(p.dim()) + " elements",
                true, {}};

  const std::size_t m = f.num_maximal_cones();
  std::vector<std::optional<std::size_t>> assigned(m);
  std::vector<std::vector<std::string>> failures(m);
  parallel_for(m, [&](std::size_t c) {
    const auto gens = f.generators(c);
    if (gens.size() != f.ambient().dim()) {
      failures[c].push_back("cone " + std::to_string(c) + " is not full-dimensional");
      return;
    }
    IntVector sum{std::vector<std::int64_t>(f.ambient().dim(), 0)};
    for (const auto& g : gens) sum = sum + g;
    const auto at_sum = min_face(sum, vertices);
    if (at_sum.optimal_face.size() != 1) {
      failures[c].push_back("cone " + std::to_string(c) + ": " + std::to_string(at_sum.optimal_face.size()) +
                            " vertices minimize " + sum.str());
      return;
    }
    const std::size_t v = at_sum.optimal_face.front();
    std::int64_t per_ray = 0;
    for (const auto& g : gens) {
      const auto at_ray = min_face(g, vertices);
      if (!std::binary_search(at_ray.optimal_face.begin(), at_ray.optimal_face.end(), v)) {
        failures[c].push_back("cone " + std::to_string(c) + ": vertex " + vertices.vertices[v].str() +
                              " does not minimize ray " + g.str());
      }
      per_ray = checked::add(per_ray, at_ray.optimal_value);
    }
    if (per_ray != at_sum.optimal_value) {
      failures[c].push_back("cone " + std::to_string(c) + ": support function is not linear");
    }
    assigned[c] = v;
  });

  for (auto& list : failures) {
    for (auto& w : list) report.fail(std::move(w));
  }
  std::set<std::size_t> hit;
  for (std::size_t c = 0; c < m; ++c) {
    if (assigned[c] && !hit.insert(*assigned[c]).second) {
      report.fail("vertex " + vertices.vertices[*assigned[c]].str() + " is assigned to two cones");
    }
  }
  if (hit.size() != vertices.vertices.size() || m != vertices.vertices.size()) {
    report.fail(std::to_string(m) + " maximal cones against " + std::to_string(vertices.vertices.size()) +
                " vertices");
  }
  return report;
}

}  // namespace polyfan

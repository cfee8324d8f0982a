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

#include "polyfan/fan.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "polyfan/parallel.hpp"

namespace polyfan {

Fan::Fan(AmbientSpace ambient, std::vector<IntVector> rays, std::vector<RayIndices> cones)
    : ambient_(std::move(ambient)) {
  for (const auto& r : rays) {
    if (r.size() != ambient_.dim()) {
      throw Error(ErrorCode::kInvalidArgument, "ray " + r.str() + " has the wrong dimension");
    }
    if (!is_primitive(r)) {
      throw Error(ErrorCode::kInvalidArgument, "ray " + r.str() + " is not primitive");
    }
  }
  rays_ = rays;
  std::sort(rays_.begin(), rays_.end());
  rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());

  std::vector<RayIndices> canonical;
  canonical.reserve(cones.size());
  for (const auto& c : cones) {
    RayIndices idx;
    idx.reserve(c.size());
    for (auto i : c) {
      if (i >= rays.size()) throw Error(ErrorCode::kInvalidArgument, "ray index out of range");
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(rays_.begin(), rays_.end(), rays[i]) - rays_.begin()));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw Error(ErrorCode::kDependentGenerators, "cone repeats a ray");
    }
    canonical.push_back(std::move(idx));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  // Larger cones first so that a face is always tested against its superset.
  std::vector<std::size_t> order(canonical.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return canonical[a].size() > canonical[b].size();
  });
  std::vector<bool> keep(canonical.size(), true);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const auto& small = canonical[order[oi]];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const auto& big = canonical[order[oj]];
      if (keep[order[oj]] && big.size() > small.size() &&
          std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        keep[order[oi]] = false;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    if (keep[i]) cones_.push_back(std::move(canonical[i]));
  }

  // Drop rays no longer used by any cone.
  std::vector<bool> used(rays_.size(), false);
  for (const auto& c : cones_) {
    for (auto i : c) used[i] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    std::vector<std::size_t> remap(rays_.size());
    std::vector<IntVector> kept;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      remap[i] = kept.size();
      if (used[i]) kept.push_back(rays_[i]);
    }
    rays_ = std::move(kept);
    for (auto& c : cones_) {
      for (auto& i : c) i = remap[i];
    }
  }
}

Fan Fan::from_generators(AmbientSpace ambient, const std::vector<std::vector<IntVector>>& cones) {
  std::vector<IntVector> rays;
  std::vector<RayIndices> idx;
  idx.reserve(cones.size());
  for (const auto& c : cones) {
    RayIndices ci;
    for (const auto& g : c) {
      ci.push_back(rays.size());
      rays.push_back(g);
    }
    idx.push_back(std::move(ci));
  }
  return Fan(std::move(ambient), std::move(rays), std::move(idx));
}

std::optional<std::size_t> Fan::ray_index(const IntVector& ray) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), ray);
  if (it == rays_.end() || *it != ray) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

std::vector<IntVector> Fan::generators(std::size_t cone) const {
  std::vector<IntVector> g;
  g.reserve(cones_.at(cone).size());
  for (auto i : cones_[cone]) g.push_back(rays_[i]);
  return g;
}

std::optional<RayIndices> Fan::face_indices(const Cone& tau) const {
  if (!(tau.ambient() == ambient_)) return std::nullopt;
  RayIndices idx;
  for (const auto& g : tau.generators()) {
    auto i = ray_index(g);
    if (!i) return std::nullopt;
    idx.push_back(*i);
  }
  std::sort(idx.begin(), idx.end());
  for (const auto& c : cones_) {
    if (std::includes(c.begin(), c.end(), idx.begin(), idx.end())) return idx;
  }
  return std::nullopt;
}

namespace {

// Coordinates of points with respect to a fixed simplicial cone, via a
// precomputed adjugate on an invertible square subsystem.
class ConeSolver {
 public:
  explicit ConeSolver(std::vector<IntVector> generators) : gens_(std::move(generators)) {
    const std::size_t k = gens_.size();
    if (k == 0) return;
    const std::size_t d = gens_[0].size();
    std::vector<IntVector> sub;
    for (std::size_t r = 0; r < d && picked_.size() < k; ++r) {
      IntVector row;
      row.coords.resize(k);
      for (std::size_t i = 0; i < k; ++i) row.coords[i] = gens_[i][r];
      sub.push_back(row);
      if (matrix_rank(sub) == sub.size()) {
        picked_.push_back(r);
      } else {
        sub.pop_back();
      }
    }
    if (picked_.size() < k) {
      throw Error(ErrorCode::kDependentGenerators, "cone generators are linearly dependent");
    }
    det_ = determinant(sub);
    adj_.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t r = 0; r < k; ++r) {
        std::vector<IntVector> minor;
        for (std::size_t rr = 0; rr < k; ++rr) {
          if (rr == r) continue;
          IntVector row;
          for (std::size_t c = 0; c < k; ++c) {
            if (c != i) row.coords.push_back(sub[rr][c]);
          }
          minor.push_back(row);
        }
        const std::int64_t m = determinant(minor);
        adj_[i][r] = (i + r) % 2 == 0 ? m : checked::neg(m);
      }
    }
    if (det_ < 0) {
      det_ = checked::neg(det_);
      for (auto& row : adj_) {
        for (auto& x : row) x = checked::neg(x);
      }
    }
  }

  // det * (coefficients of p), or nullopt if p is outside the span.
  std::optional<std::vector<std::int64_t>> scaled_coefficients(const IntVector& p) const {
    const std::size_t k = gens_.size();
    std::vector<std::int64_t> c(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t s = 0;
      for (std::size_t r = 0; r < k; ++r) s = checked::add(s, checked::mul(adj_[i][r], p[picked_[r]]));
      c[i] = s;
    }
    for (std::size_t r = 0; r < p.size(); ++r) {
      std::int64_t lhs = 0;
      for (std::size_t i = 0; i < k; ++i) lhs = checked::add(lhs, checked::mul(c[i], gens_[i][r]));
      if (lhs != checked::mul(det_, p[r])) return std::nullopt;
    }
    return c;
  }

  bool contains(const IntVector& p) const {
    auto c = scaled_coefficients(p);
    return c && std::all_of(c->begin(), c->end(), [](auto x) { return x >= 0; });
  }

 private:
  std::vector<IntVector> gens_;
  std::vector<std::size_t> picked_;
  Matrix adj_;
  std::int64_t det_ = 1;
};

void normalize_row(std::vector<std::int64_t>& row) {
  std::int64_t g = 0;
  for (auto x : row) g = checked::gcd(g, x);
  if (g > 1) {
    for (auto& x : row) x /= g;
  }
}

// Phase-one simplex with Bland's rule on an integer tableau kept
// fraction-free by cross-multiplication. Decides whether
// {columns * x = rhs, x >= 0} has a solution.
bool nonnegative_solution_exists(const Matrix& columns, std::vector<std::int64_t> rhs) {
  const std::size_t n = columns.size();
  const std::size_t m = rhs.size();
  const std::size_t width = n + m + 1;
  Matrix t(m, std::vector<std::int64_t>(width, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t sign = rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * columns[j][i];
    t[i][n + i] = 1;
    t[i][width - 1] = sign * rhs[i];
  }
  std::vector<std::int64_t> obj(width, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] = checked::add(obj[j], t[i][j]);
    obj[width - 1] = checked::add(obj[width - 1], t[i][width - 1]);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      const auto lhs = checked::mul(t[i][width - 1], t[leave][enter]);
      const auto rhs_cmp = checked::mul(t[leave][width - 1], t[i][enter]);
      if (lhs < rhs_cmp || (lhs == rhs_cmp && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) throw Error(ErrorCode::kInternalInvariant, "unbounded phase-one program");
    const std::int64_t p = t[leave][enter];
    auto eliminate = [&](std::vector<std::int64_t>& row) {
      const std::int64_t f = row[enter];
      if (f == 0) return;
      for (std::size_t j = 0; j < width; ++j) {
        row[j] = checked::sub(checked::mul(row[j], p), checked::mul(t[leave][j], f));
      }
      normalize_row(row);
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (i != leave) eliminate(t[i]);
    }
    eliminate(obj);
    normalize_row(t[leave]);
    basis[leave] = enter;
  }
  return obj[width - 1] == 0;
}

// True iff cone(g) and cone(h) meet in the common face spanned by their
// shared generators.
bool meet_properly(const Fan& f, const RayIndices& g, const RayIndices& h) {
  RayIndices shared, only_g, only_h;
  std::set_intersection(g.begin(), g.end(), h.begin(), h.end(), std::back_inserter(shared));
  if (shared.size() == g.size() || shared.size() == h.size()) return true;
  std::set_difference(g.begin(), g.end(), h.begin(), h.end(), std::back_inserter(only_g));
  std::set_difference(h.begin(), h.end(), g.begin(), g.end(), std::back_inserter(only_h));
  const std::size_t d = f.ambient().dim();
  Matrix columns;
  auto push = [&](const IntVector& v, std::int64_t scale, std::int64_t last) {
    std::vector<std::int64_t> col(d + 1);
    for (std::size_t r = 0; r < d; ++r) col[r] = scale * v[r];
    col[d] = last;
    columns.push_back(std::move(col));
  };
  for (auto i : only_g) push(f.rays()[i], 1, 1);
  for (auto i : only_h) push(f.rays()[i], -1, 1);
  for (auto i : shared) {
    push(f.rays()[i], 1, 0);
    push(f.rays()[i], -1, 0);
  }
  std::vector<std::int64_t> rhs(d + 1, 0);
  rhs[d] = 1;
  return !nonnegative_solution_exists(columns, rhs);
}

std::string indices_str(const RayIndices& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

}  // namespace

FanReport fan_validate(const Fan& f) {
  FanReport report;
  const auto& cones = f.maximal_cones();
  const std::size_t d = f.ambient().dim();

  report.is_simplicial = true;
  report.is_smooth = true;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const auto gens = f.generators(i);
    if (matrix_rank(gens) != gens.size()) {
      report.is_simplicial = false;
      report.is_smooth = false;
      report.witnesses.push_back("cone " + indices_str(cones[i]) + " is not simplicial");
      continue;
    }
    if (!cone_is_smooth(Cone(f.ambient(), gens))) {
      report.is_smooth = false;
      report.witnesses.push_back("cone " + indices_str(cones[i]) + " is not smooth");
    }
  }
  if (!report.is_simplicial) return report;

  std::atomic<bool> proper{true};
  std::mutex mu;
  parallel_for(cones.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!meet_properly(f, cones[i], cones[j])) {
        proper = false;
        std::lock_guard lock(mu);
        report.witnesses.push_back("cones " + indices_str(cones[i]) + " and " +
                                   indices_str(cones[j]) + " overlap improperly");
        return;
      }
    }
  });
  report.is_fan = proper;

  // Every wall of a full-dimensional cone must be shared by exactly two cones.
  bool complete = !cones.empty();
  std::map<RayIndices, int> walls;
  for (const auto& c : cones) {
    if (c.size() != d) {
      complete = false;
      continue;
    }
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      RayIndices w;
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (t != drop) w.push_back(c[t]);
      }
      ++walls[w];
    }
  }
  if (complete && d > 0) {
    for (const auto& [w, count] : walls) {
      if (count != 2) {
        complete = false;
        report.witnesses.push_back("wall " + indices_str(w) + " lies in " + std::to_string(count) +
                                   " cone(s)");
        break;
      }
    }
  }

  if (complete && d > 0) {
    std::vector<ConeSolver> solvers;
    solvers.reserve(cones.size());
    for (std::size_t i = 0; i < cones.size(); ++i) solvers.emplace_back(f.generators(i));
    std::vector<IntVector> probes;
    const auto& rays = f.rays();
    for (const auto& r : rays) {
      probes.push_back(r);
      probes.push_back(-r);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      for (std::size_t j = i + 1; j < rays.size(); ++j) {
        auto s = rays[i] + rays[j];
        if (!s.is_zero()) probes.push_back(std::move(s));
      }
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const auto gens = f.generators(i);
      for (std::size_t opp = 0; opp < gens.size(); ++opp) {
        IntVector p{std::vector<std::int64_t>(d, 0)};
        for (std::size_t t = 0; t < gens.size(); ++t) {
          if (t != opp) p = p + gens[t];
        }
        probes.push_back(p - gens[opp]);
      }
    }
    std::atomic<bool> covered{true};
    parallel_for(probes.size(), [&](std::size_t k) {
      if (!covered) return;
      for (const auto& s : solvers) {
        if (s.contains(probes[k])) return;
      }
      covered = false;
      std::lock_guard lock(mu);
      report.witnesses.push_back("direction " + probes[k].str() + " is not covered");
    });
    complete = covered;
  }
  report.is_complete = complete;
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

Fan star_subdivision(const Fan& f, const Cone& tau) {
  if (!(tau.ambient() == f.ambient())) {
    throw Error(ErrorCode::kAmbientMismatch, "cone and fan live in different ambients");
  }
  auto idx = f.face_indices(tau);
  if (!idx) throw Error(ErrorCode::kConeNotInFan, "cone is not a face of the fan");
  if (idx->empty()) throw Error(ErrorCode::kConeNotInFan, "cannot subdivide along the zero cone");
  if (idx->size() == 1) return f;

  const IntVector v_tau = make_primitive(tau.interior_point());
  std::vector<std::vector<IntVector>> out;
  for (std::size_t c = 0; c < f.num_maximal_cones(); ++c) {
    const auto& cone = f.maximal_cones()[c];
    auto gens = f.generators(c);
    if (!std::includes(cone.begin(), cone.end(), idx->begin(), idx->end())) {
      out.push_back(std::move(gens));
      continue;
    }
    for (auto drop : *idx) {
      std::vector<IntVector> g;
      for (auto i : cone) {
        if (i != drop) g.push_back(f.rays()[i]);
      }
      g.push_back(v_tau);
      out.push_back(std::move(g));
    }
  }
  return Fan::from_generators(f.ambient(), out);
}

bool fan_equal(const Fan& f, const Fan& g) {
  if (!(f.ambient() == g.ambient())) {
    throw Error(ErrorCode::kAmbientMismatch, "fans live in different ambients");
  }
  return f.rays() == g.rays() && f.maximal_cones() == g.maximal_cones();
}

bool fan_refines(const Fan& fine, const Fan& coarse) {
  if (!(fine.ambient() == coarse.ambient())) {
    throw Error(ErrorCode::kAmbientMismatch, "fans live in different ambients");
  }
  std::vector<ConeSolver> coarse_solvers;
  for (std::size_t j = 0; j < coarse.num_maximal_cones(); ++j) {
    coarse_solvers.emplace_back(coarse.generators(j));
  }
  // inside[j] lists the fine maximal cones contained in coarse cone j.
  std::vector<std::vector<std::size_t>> inside(coarse.num_maximal_cones());
  for (std::size_t i = 0; i < fine.num_maximal_cones(); ++i) {
    const auto gens = fine.generators(i);
    bool placed = false;
    for (std::size_t j = 0; j < coarse_solvers.size(); ++j) {
      if (std::all_of(gens.begin(), gens.end(),
                      [&](const IntVector& g) { return coarse_solvers[j].contains(g); })) {
        inside[j].push_back(i);
        placed = true;
      }
    }
    if (!placed) return false;
  }
  // Each coarse cone must be covered: the equidimensional fine cones inside it
  // form a pseudomanifold whose unpaired walls all lie on its boundary.
  for (std::size_t j = 0; j < coarse_solvers.size(); ++j) {
    const std::size_t k = coarse.maximal_cones()[j].size();
    std::map<RayIndices, int> walls;
    bool any = false;
    for (auto i : inside[j]) {
      const auto& c = fine.maximal_cones()[i];
      if (c.size() != k) continue;
      any = true;
      for (std::size_t drop = 0; drop < k; ++drop) {
        RayIndices w;
        for (std::size_t t = 0; t < k; ++t) {
          if (t != drop) w.push_back(c[t]);
        }
        ++walls[w];
      }
    }
    if (!any) return false;
    for (const auto& [w, count] : walls) {
      if (count >= 2) continue;
      // An unpaired wall must lie in a facet of the coarse cone.
      std::vector<bool> zero_everywhere(k, true);
      for (auto r : w) {
        auto coeff = coarse_solvers[j].scaled_coefficients(fine.rays()[r]);
        for (std::size_t t = 0; t < k; ++t) {
          if ((*coeff)[t] != 0) zero_everywhere[t] = false;
        }
      }
      if (std::find(zero_everywhere.begin(), zero_everywhere.end(), true) == zero_everywhere.end()) {
        return false;
      }
    }
  }
  return true;
}

namespace {

GroundOrder ground_without(const GroundOrder& g, std::size_t drop) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != drop) labels.push_back(g.label(i));
  }
  return GroundOrder(std::move(labels));
}

}  // namespace

Fan star_of_ray(const Fan& f, const IntVector& rho) {
  auto r = f.ray_index(rho);
  if (!r) throw Error(ErrorCode::kNotARay, rho.str() + " is not a ray of the fan");
  const auto& ambient = f.ambient();
  const std::size_t d = ambient.dim();

  AmbientSpace target;
  std::function<IntVector(const IntVector&)> project;
  const bool all_ones = d > 0 && std::all_of(rho.coords.begin(), rho.coords.end(),
                                             [&](auto c) { return c == rho[0]; });
  std::size_t unit = d;
  for (std::size_t k = 0; k < d; ++k) {
    if (checked::abs(rho[k]) == 1) unit = k;
  }
  if (!ambient.is_quotient() && all_ones) {
    // The line through e_A: the quotient is the all-ones quotient of the same ground.
    target = AmbientSpace::quotient(ambient.ground());
    project = [target](const IntVector& x) { return canonical_vector(x.coords, target); };
  } else if (unit < d) {
    target = AmbientSpace(ground_without(ambient.ground(), unit), ambient.mode());
    project = [rho, unit](const IntVector& x) {
      IntVector y = x - rho.scaled(checked::mul(rho[unit], x[unit]));
      y.coords.erase(y.coords.begin() + static_cast<std::ptrdiff_t>(unit));
      return y;
    };
  } else {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i < d; ++i) labels.push_back("q" + std::to_string(i));
    target = AmbientSpace::full(GroundOrder(std::move(labels)));
    const Matrix u = unimodular_completion(rho);
    project = [u](const IntVector& x) {
      IntVector y = apply(u, x);
      y.coords.erase(y.coords.begin());
      return y;
    };
  }

  std::vector<std::vector<IntVector>> out;
  for (std::size_t c = 0; c < f.num_maximal_cones(); ++c) {
    const auto& cone = f.maximal_cones()[c];
    if (!std::binary_search(cone.begin(), cone.end(), *r)) continue;
    std::vector<IntVector> g;
    for (auto i : cone) {
      if (i != *r) g.push_back(make_primitive(project(f.rays()[i])));
    }
    out.push_back(std::move(g));
  }
  return Fan::from_generators(target, out);
}

OpenStar open_star_subfans(const Fan& f, const IntVector& rho) {
  auto r = f.ray_index(rho);
  if (!r) throw Error(ErrorCode::kNotARay, rho.str() + " is not a ray of the fan");
  std::vector<std::vector<IntVector>> prime, double_prime;
  for (std::size_t c = 0; c < f.num_maximal_cones(); ++c) {
    const auto& cone = f.maximal_cones()[c];
    if (!std::binary_search(cone.begin(), cone.end(), *r)) continue;
    prime.push_back(f.generators(c));
    std::vector<IntVector> g;
    for (auto i : cone) {
      if (i != *r) g.push_back(f.rays()[i]);
    }
    double_prime.push_back(std::move(g));
  }
  return {Fan::from_generators(f.ambient(), prime), Fan::from_generators(f.ambient(), double_prime)};
}

Fan simplex_fan(const GroundOrder& ground) {
  const AmbientSpace ambient = AmbientSpace::quotient(ground);
  const std::size_t n = ground.size();
  std::vector<std::vector<IntVector>> cones;
  for (std::size_t omit = 0; omit < n; ++omit) {
    std::vector<IntVector> g;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != omit) g.push_back(indicator_vector(std::uint64_t{1} << i, ambient));
    }
    cones.push_back(std::move(g));
  }
  return Fan::from_generators(ambient, cones);
}

Fan point_fan(const GroundOrder& ground) {
  const AmbientSpace ambient = AmbientSpace::quotient(ground);
  if (ambient.dim() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "the point fan needs a one-element ground set");
  }
  return Fan(ambient, {}, {RayIndices{}});
}

}  // namespace polyfan

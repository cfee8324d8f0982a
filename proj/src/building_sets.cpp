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

#include "polyfan/building_sets.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyfan {

std::string subset_str(Subset s, const GroundOrder& ground) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (s & bit(i)) {
      os << (first ? "" : ",") << ground.label(i);
      first = false;
    }
  }
  os << '}';
  return os.str();
}

Caging::Caging(GroundOrder source, GroundOrder target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "caging map must cover the whole source");
  }
  if (source_.size() > kMaxGround || target_.size() > kMaxGround) {
    throw Error(ErrorCode::kInvalidArgument, "ground sets are capped at 62 elements");
  }
  fibers_.assign(target_.size(), 0);
  for (std::size_t a = 0; a < map_.size(); ++a) {
    if (map_[a] >= target_.size()) throw Error(ErrorCode::kInvalidArgument, "caging image out of range");
    fibers_[map_[a]] |= bit(a);
  }
  for (std::size_t e = 0; e < target_.size(); ++e) {
    if (fibers_[e] == 0) {
      throw Error(ErrorCode::kInvalidArgument, "caging misses target element " + target_.label(e));
    }
  }
}

Caging Caging::from_cage(const std::vector<std::size_t>& cage) {
  if (cage.empty()) throw Error(ErrorCode::kBadCage, "empty cage");
  std::size_t total = 0;
  std::vector<std::size_t> map;
  for (std::size_t e = 0; e < cage.size(); ++e) {
    if (cage[e] == 0) throw Error(ErrorCode::kBadCage, "cage entries must be positive");
    total += cage[e];
    if (total > kMaxGround) throw Error(ErrorCode::kBadCage, "cage total exceeds 62");
    map.insert(map.end(), cage[e], e);
  }
  return Caging(GroundOrder::numbered(total), GroundOrder::numbered(cage.size()), std::move(map));
}

Caging Caging::parse_cage(std::string_view text) {
  std::vector<std::size_t> cage;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (token.empty() || token.size() > 3 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorCode::kBadCage, "cannot parse cage '" + std::string(text) + "'");
    }
    cage.push_back(std::stoul(std::string(token)));
    pos = comma + 1;
  }
  return from_cage(cage);
}

Caging Caging::identity(GroundOrder ground) {
  std::vector<std::size_t> map(ground.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  GroundOrder copy = ground;
  return Caging(std::move(ground), std::move(copy), std::move(map));
}

std::vector<std::size_t> Caging::cage() const {
  std::vector<std::size_t> c;
  for (auto f : fibers_) c.push_back(cardinality(f));
  return c;
}

Subset Caging::preimage(Subset s) const {
  Subset r = 0;
  for (std::size_t e = 0; e < fibers_.size(); ++e) {
    if (s & bit(e)) r |= fibers_[e];
  }
  return r;
}

Subset Caging::image_of(Subset s) const {
  Subset r = 0;
  for (std::size_t a = 0; a < map_.size(); ++a) {
    if (s & bit(a)) r |= bit(map_[a]);
  }
  return r;
}

Subset Caging::full_fibers_in(Subset i) const {
  Subset r = 0;
  for (std::size_t e = 0; e < fibers_.size(); ++e) {
    if (is_subset(fibers_[e], i)) r |= bit(e);
  }
  return r;
}

bool Caging::refines(const Caging& coarser) const {
  if (!(source_ == coarser.source_)) return false;
  return std::all_of(fibers_.begin(), fibers_.end(), [&](Subset f) {
    return is_subset(f, coarser.fiber(coarser.image(static_cast<std::size_t>(__builtin_ctzll(f)))));
  });
}

std::string Caging::cage_str() const {
  std::string s;
  for (auto a : cage()) s += (s.empty() ? "" : ",") + std::to_string(a);
  return s;
}

BuildingSet BuildingSet::validate(GroundOrder ground, std::vector<Subset> members) {
  if (ground.size() > kMaxGround) {
    throw Error(ErrorCode::kInvalidArgument, "ground sets are capped at 62 elements");
  }
  const Subset all = full_subset(ground.size());
  for (auto m : members) {
    if (m == 0 || !is_subset(m, all)) {
      throw Error(ErrorCode::kInvalidArgument, "members must be nonempty subsets of the ground set");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto has = [&](Subset s) { return std::binary_search(members.begin(), members.end(), s); };
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!has(bit(i))) {
      throw Error(ErrorCode::kMissingSingleton, "singleton {" + ground.label(i) + "} is missing");
    }
  }
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      if ((members[x] & members[y]) != 0 && !has(members[x] | members[y])) {
        throw Error(ErrorCode::kUnionViolation, subset_str(members[x], ground) + " and " +
                                                    subset_str(members[y], ground) +
                                                    " meet but their union is missing");
      }
    }
  }
  BuildingSet b;
  b.ground_ = std::move(ground);
  b.members_ = std::move(members);
  return b;
}

bool BuildingSet::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

BuildingSet boolean_building_set(const GroundOrder& ground) {
  if (ground.size() > 20) throw Error(ErrorCode::kInvalidArgument, "boolean building set too large");
  std::vector<Subset> members;
  for (Subset s = 1; s <= full_subset(ground.size()); ++s) members.push_back(s);
  return BuildingSet::validate(ground, std::move(members));
}

namespace {

bool induced_connected(Subset t, const std::vector<Subset>& adjacency) {
  if (t == 0) return false;
  Subset seen = t & (~t + 1);
  Subset frontier = seen;
  while (frontier) {
    Subset next = 0;
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
      if (frontier & bit(v)) next |= adjacency[v] & t;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == t;
}

}  // namespace

BuildingSet graphical_building_set(const GroundOrder& ground,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t n = ground.size();
  if (n > 20) throw Error(ErrorCode::kInvalidArgument, "graph too large");
  std::vector<Subset> adjacency(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    adjacency[u] |= bit(v);
    adjacency[v] |= bit(u);
  }
  if (n > 0 && !induced_connected(full_subset(n), adjacency)) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph is not connected");
  }
  std::vector<Subset> members;
  for (Subset t = 1; t <= full_subset(n); ++t) {
    if (induced_connected(t, adjacency)) members.push_back(t);
  }
  return BuildingSet::validate(ground, std::move(members));
}

BuildingSet pullback_building_set(const BuildingSet& b, const Caging& pi) {
  if (!(b.ground() == pi.target())) {
    throw Error(ErrorCode::kGroundMismatch, "building set is not over the caging target");
  }
  std::vector<Subset> members;
  for (std::size_t a = 0; a < pi.source().size(); ++a) members.push_back(bit(a));
  for (auto s : b.members()) members.push_back(pi.preimage(s));
  return BuildingSet::validate(pi.source(), std::move(members));
}

namespace {

void require_connected(const BuildingSet& b) {
  if (!b.is_connected()) throw Error(ErrorCode::kNotConnected, "building set is not connected");
}

class NestedSetSearch {
 public:
  explicit NestedSetSearch(const BuildingSet& b) : b_(b) {
    const Subset all = full_subset(b.ground().size());
    for (auto m : b.members()) {
      if (m != all) candidates_.push_back(m);
    }
  }

  std::vector<NestedSet> run() {
    recurse(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool extends(Subset s) const {
    std::vector<Subset> disjoint;
    for (auto t : current_.members) {
      if ((s & t) == 0) {
        disjoint.push_back(t);
      } else if (!is_subset(s, t) && !is_subset(t, s)) {
        return false;
      }
    }
    // Antichains through s are pairwise disjoint selections of these members.
    const std::size_t k = disjoint.size();
    for (Subset pick = 1; pick < (Subset{1} << k); ++pick) {
      Subset acc = s;
      bool antichain = true;
      for (std::size_t i = 0; i < k && antichain; ++i) {
        if (!(pick & bit(i))) continue;
        if (acc & disjoint[i]) antichain = false;
        acc |= disjoint[i];
      }
      if (antichain && b_.contains(acc)) return false;
    }
    return true;
  }

  void recurse(std::size_t start) {
    out_.push_back(current_);
    for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
      const Subset s = candidates_[idx];
      if (!extends(s)) continue;
      current_.members.push_back(s);
      recurse(idx + 1);
      current_.members.pop_back();
    }
  }

  const BuildingSet& b_;
  std::vector<Subset> candidates_;
  NestedSet current_;
  std::vector<NestedSet> out_;
};

}  // namespace

std::vector<NestedSet> enumerate_nested_sets(const BuildingSet& b) {
  require_connected(b);
  return NestedSetSearch(b).run();
}

Fan nested_fan(const BuildingSet& b) {
  require_connected(b);
  const AmbientSpace ambient = AmbientSpace::quotient(b.ground());
  const std::size_t top = b.ground().size() - 1;
  std::vector<std::vector<IntVector>> cones;
  for (const auto& n : enumerate_nested_sets(b)) {
    // Every maximal nested set of a connected building set has |E| - 1 members.
    if (n.members.size() != top) continue;
    std::vector<IntVector> g;
    for (auto s : n.members) g.push_back(indicator_vector(s, ambient));
    cones.push_back(std::move(g));
  }
  return Fan::from_generators(ambient, cones);
}

std::vector<Subset> subdivision_order(const BuildingSet& b) {
  const Subset all = full_subset(b.ground().size());
  std::vector<Subset> order;
  for (auto m : b.members()) {
    if (cardinality(m) >= 2 && m != all) order.push_back(m);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](Subset x, Subset y) { return cardinality(x) > cardinality(y); });
  return order;
}

Cone coordinate_cone(Subset s, const AmbientSpace& ambient) {
  std::vector<IntVector> g;
  for (std::size_t i = 0; i < ambient.ground().size(); ++i) {
    if (s & bit(i)) g.push_back(indicator_vector(bit(i), ambient));
  }
  return Cone(ambient, std::move(g));
}

Fan nested_fan_by_subdivision(const BuildingSet& b) {
  require_connected(b);
  Fan f = simplex_fan(b.ground());
  for (auto s : subdivision_order(b)) f = star_subdivision(f, coordinate_cone(s, f.ambient()));
  return f;
}

NestedSet pi_pair_nested_set(const PiPair& p, const Caging& pi) {
  NestedSet out;
  for (std::size_t a = 0; a < pi.source().size(); ++a) {
    if (p.i & bit(a)) out.members.push_back(bit(a));
  }
  for (auto s : p.n.members) out.members.push_back(pi.preimage(s));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<PiPair> enumerate_pi_pairs(const Caging& pi, const BuildingSet& b) {
  if (!(b.ground() == pi.target())) {
    throw Error(ErrorCode::kGroundMismatch, "building set is not over the caging target");
  }
  const auto nested = enumerate_nested_sets(b);
  const Subset all = full_subset(pi.source().size());
  std::vector<PiPair> pairs;
  for (Subset i = 0; i < all; ++i) {
    if (pi.full_fibers_in(i) != 0) continue;
    for (const auto& n : nested) pairs.push_back(PiPair{i, n});
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<NestedSet> images;
  images.reserve(pairs.size());
  for (const auto& p : pairs) images.push_back(pi_pair_nested_set(p, pi));
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end() ||
      images != enumerate_nested_sets(pullback_building_set(b, pi))) {
    throw Error(ErrorCode::kInternalInvariant, "pi-pairs do not biject onto pullback nested sets");
  }
  return pairs;
}

Cone pi_pair_cone(const PiPair& p, const Caging& pi) {
  const AmbientSpace ambient = AmbientSpace::quotient(pi.source());
  std::vector<IntVector> g;
  for (std::size_t a = 0; a < pi.source().size(); ++a) {
    if (p.i & bit(a)) g.push_back(indicator_vector(bit(a), ambient));
  }
  for (auto s : p.n.members) g.push_back(indicator_vector(pi.preimage(s), ambient));
  return Cone(ambient, std::move(g));
}

}  // namespace polyfan

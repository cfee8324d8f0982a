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

#include "polyfan/polymatroid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace polyfan {

namespace {

constexpr std::size_t kMaxRankGround = 20;

}  // namespace

RankFunction RankFunction::validate(GroundOrder ground, std::vector<std::int64_t> table) {
  const std::size_t n = ground.size();
  if (n > kMaxRankGround) throw Error(ErrorCode::kInvalidArgument, "rank ground set too large");
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidArgument, "rank table must list every subset");
  }
  if (table[0] != 0) throw Error(ErrorCode::kNotNormalized, "f(empty set) = " + std::to_string(table[0]));
  for (Subset s = 0; s < table.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s & bit(i)) continue;
      if (table[s] > table[s | bit(i)]) {
        throw Error(ErrorCode::kNotMonotone,
                    "f" + subset_str(s, ground) + " > f" + subset_str(s | bit(i), ground));
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s & bit(j)) continue;
        const Subset si = s | bit(i);
        const Subset sj = s | bit(j);
        if (checked::add(table[si], table[sj]) < checked::add(table[si | sj], table[s])) {
          throw Error(ErrorCode::kNotSubmodular,
                      "f" + subset_str(si, ground) + " + f" + subset_str(sj, ground) +
                          " < f(union) + f(intersection)");
        }
      }
    }
  }
  RankFunction f;
  f.ground_ = std::move(ground);
  f.table_ = std::move(table);
  return f;
}

RankFunction perm_rank(std::size_t n) {
  if (n == 0 || n > kMaxRankGround) throw Error(ErrorCode::kInvalidArgument, "perm_rank needs 1 <= n <= 20");
  std::vector<std::int64_t> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) {
    std::int64_t v = 0;
    for (std::size_t k = 0; k < cardinality(s); ++k) v += static_cast<std::int64_t>(n - k);
    table[s] = v;
  }
  return RankFunction::validate(GroundOrder::numbered(n), std::move(table));
}

RankFunction expansion(const RankFunction& f, const Caging& pi) {
  if (!(f.ground() == pi.target())) {
    throw Error(ErrorCode::kGroundMismatch, "rank function is not over the caging target");
  }
  const std::size_t m = pi.source().size();
  if (m > kMaxRankGround) throw Error(ErrorCode::kInvalidArgument, "expansion ground set too large");
  std::vector<std::int64_t> table(std::size_t{1} << m);
  for (Subset s = 0; s < table.size(); ++s) table[s] = f(pi.image_of(s));
  return RankFunction::validate(pi.source(), std::move(table));
}

RankFunction random_polymatroid(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n > 10) throw Error(ErrorCode::kInvalidArgument, "random polymatroid needs 1 <= n <= 10");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const GroundOrder ground = GroundOrder::numbered(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int64_t> weight(n);
  for (auto& w : weight) w = draw(0, 3);
  std::vector<std::int64_t> table(size, 0);
  for (Subset s = 0; s < size; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s & bit(i)) table[s] += weight[i];
    }
  }
  const int rounds = static_cast<int>(draw(1, 4));
  for (int r = 0; r < rounds; ++r) {
    const Subset t = static_cast<Subset>(draw(0, static_cast<std::int64_t>(size - 1)));
    const std::int64_t c = draw(0, 4);
    const std::int64_t d = draw(0, 2);
    auto candidate = table;
    for (Subset s = 1; s < size; ++s) {
      candidate[s] = std::min(candidate[s], c + static_cast<std::int64_t>(cardinality(s & t)) * d);
    }
    try {
      RankFunction::validate(ground, candidate);
      table = std::move(candidate);
    } catch (const Error&) {
    }
  }
  return RankFunction::validate(ground, std::move(table));
}

IndependencePolytope::IndependencePolytope(RankFunction rank, bool base_mode)
    : rank_(std::move(rank)), base_mode_(base_mode) {}

std::vector<Inequality> IndependencePolytope::inequalities() const {
  const std::size_t n = dim();
  std::vector<Inequality> out;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality q{std::vector<std::int64_t>(n, 0), 0};
    q.coeffs[i] = -1;
    out.push_back(std::move(q));
  }
  for (Subset s = 1; s <= full_subset(n); ++s) {
    Inequality q{std::vector<std::int64_t>(n, 0), rank_(s)};
    for (std::size_t i = 0; i < n; ++i) q.coeffs[i] = (s >> i) & 1U;
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Inequality> IndependencePolytope::equalities() const {
  if (!base_mode_) return {};
  const std::size_t n = dim();
  return {Inequality{std::vector<std::int64_t>(n, 1), rank_(full_subset(n))}};
}

bool IndependencePolytope::contains(const IntVector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < 0) return false;
  }
  for (Subset s = 1; s <= full_subset(n); ++s) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s & bit(i)) sum = checked::add(sum, x[i]);
    }
    if (sum > rank_(s)) return false;
    if (base_mode_ && s == full_subset(n) && sum != rank_(s)) return false;
  }
  return true;
}

std::vector<std::int64_t> IndependencePolytope::box() const {
  std::vector<std::int64_t> b(dim());
  for (std::size_t i = 0; i < dim(); ++i) b[i] = rank_(bit(i));
  return b;
}

VertexList greedy_vertices(const IndependencePolytope& p) {
  const std::size_t n = p.dim();
  const auto& f = p.rank();
  std::vector<IntVector> out;
  // Each ordered subset (or ordering, in base mode) is a sequence of distinct
  // elements; walk them as prefixes of permutations.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    IntVector v{std::vector<std::int64_t>(n, 0)};
    Subset prefix = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Subset next = prefix | bit(perm[k]);
      v.coords[perm[k]] = checked::sub(f(next), f(prefix));
      prefix = next;
      if (!p.base_mode()) {
        out.push_back(v);
      }
    }
    if (p.base_mode() || n == 0) out.push_back(v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!p.base_mode()) out.push_back(IntVector{std::vector<std::int64_t>(n, 0)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& v : out) {
    if (!p.contains(v)) {
      throw Error(ErrorCode::kInternalInvariant, "greedy point " + v.str() + " violates the H-representation");
    }
  }
  return VertexList{std::move(out), true};
}

std::vector<IntVector> lattice_points(const IndependencePolytope& p) {
  const auto box = p.box();
  const std::size_t n = box.size();
  std::vector<IntVector> out;
  IntVector x{std::vector<std::int64_t>(n, 0)};
  for (;;) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x.coords[i] == box[i]) x.coords[i++] = 0;
    if (i == n) break;
    ++x.coords[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Mixed-radix index of points in the box [0, box].
class BoxIndex {
 public:
  explicit BoxIndex(const std::vector<std::int64_t>& box) : box_(box) {
    stride_.resize(box.size());
    std::size_t s = 1;
    for (std::size_t i = 0; i < box.size(); ++i) {
      stride_[i] = s;
      s *= static_cast<std::size_t>(box[i] + 1);
    }
    size_ = s;
  }
  std::size_t size() const { return size_; }
  bool inside(const IntVector& x) const {
    for (std::size_t i = 0; i < box_.size(); ++i) {
      if (x[i] < 0 || x[i] > box_[i]) return false;
    }
    return true;
  }
  std::size_t index(const IntVector& x) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < box_.size(); ++i) k += static_cast<std::size_t>(x[i]) * stride_[i];
    return k;
  }
  IntVector point(std::size_t k) const {
    IntVector x{std::vector<std::int64_t>(box_.size())};
    for (std::size_t i = 0; i < box_.size(); ++i) {
      x.coords[i] = static_cast<std::int64_t>((k / stride_[i]) % static_cast<std::size_t>(box_[i] + 1));
    }
    return x;
  }

 private:
  std::vector<std::int64_t> box_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

}  // namespace

CharacterizationReport check_independence_characterization(const std::vector<IntVector>& points,
                                                           const std::vector<std::int64_t>& box) {
  CharacterizationReport report;
  const std::size_t n = box.size();
  BoxIndex index(box);
  std::vector<bool> member(index.size(), false);
  for (const auto& u : points) {
    if (u.size() != n || !index.inside(u)) {
      report.downward_closed = false;
      report.witnesses.push_back("point " + u.str() + " lies outside the box");
      continue;
    }
    member[index.index(u)] = true;
  }
  for (const auto& u : points) {
    if (u.size() != n || !index.inside(u)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      IntVector v = u;
      --v.coords[i];
      if (!member[index.index(v)]) {
        report.downward_closed = false;
        report.witnesses.push_back("(1) " + v.str() + " is missing below " + u.str());
      }
    }
  }
  for (std::size_t k = 0; k < index.size(); ++k) {
    const IntVector v = index.point(k);
    std::int64_t sum = -1;
    for (const auto& u : points) {
      if (u.size() != n || !index.inside(u)) continue;
      bool below = true;
      for (std::size_t i = 0; i < n && below; ++i) below = u[i] <= v[i];
      if (!below) continue;
      bool maximal = true;
      for (std::size_t i = 0; i < n && maximal; ++i) {
        if (u[i] == v[i]) continue;
        IntVector w = u;
        ++w.coords[i];
        if (member[index.index(w)]) maximal = false;
      }
      if (!maximal) continue;
      const std::int64_t s = std::accumulate(u.coords.begin(), u.coords.end(), std::int64_t{0});
      if (sum < 0) {
        sum = s;
      } else if (s != sum) {
        report.equal_maximal_sums = false;
        report.witnesses.push_back("(2) maximal points below " + v.str() + " have sums " +
                                   std::to_string(sum) + " and " + std::to_string(s));
        break;
      }
    }
  }
  return report;
}

RankFunction recover_rank(const IndependencePolytope& p) {
  const auto vertices = greedy_vertices(p).vertices;
  const std::size_t n = p.dim();
  std::vector<std::int64_t> table(std::size_t{1} << n, 0);
  for (Subset s = 1; s < table.size(); ++s) {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& v : vertices) {
      std::int64_t x = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (s & bit(i)) x = checked::add(x, v[i]);
      }
      if (first || x > best) best = x;
      first = false;
    }
    table[s] = best;
  }
  return RankFunction::validate(p.rank().ground(), std::move(table));
}

}  // namespace polyfan

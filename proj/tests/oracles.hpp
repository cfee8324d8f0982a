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


// Brute-force oracles for tests. These deliberately avoid the library's own
// enumeration code and rely only on definitions.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "polyfan/flag_fans.hpp"
#include "polyfan/polymatroid.hpp"

namespace oracle {

using polyfan::Subset;
using Vec = std::vector<std::int64_t>;
using GeneratorSet = std::vector<Vec>;  // sorted

// Rank over Q by fraction-free elimination on 128-bit integers.
inline std::size_t rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<__int128>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const __int128 f = m[i][c];
      if (f == 0) continue;
      __int128 g = 0;
      for (std::size_t k = c; k < cols; ++k) {
        m[i][k] = m[i][k] * m[r][c] - f * m[r][k];
        __int128 a = m[i][k] < 0 ? -m[i][k] : m[i][k];
        while (a) {
          const __int128 t = g % a;
          g = a;
          a = t;
        }
      }
      if (g > 1) {
        for (std::size_t k = c; k < cols; ++k) m[i][k] /= g;
      }
    }
    ++r;
  }
  return r;
}

inline bool bit_in(Subset s, std::size_t i) { return (s >> i) & 1U; }

// Direct reading of the compatibility conditions on a triple.
inline bool compatible(const polyfan::Caging& pi, Subset i, const std::vector<Subset>& flag, Subset top, Subset j) {
  const std::size_t n = pi.target().size();
  if (top & j) return false;
  for (std::size_t l = 0; l < flag.size(); ++l) {
    if ((flag[l] & ~top) || flag[l] == top) return false;
    if (l > 0 && ((flag[l - 1] & ~flag[l]) || flag[l - 1] == flag[l])) return false;
  }
  // Every S whose full preimage lies in I.
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    Subset pre = 0;
    for (std::size_t a = 0; a < pi.source().size(); ++a) {
      if (bit_in(s, pi.image(a))) pre |= Subset{1} << a;
    }
    if (pre & ~i) continue;
    if (!flag.empty() && (s & ~flag.front())) return false;
    if (flag.empty() && (s & j)) return false;
  }
  return true;
}

inline GeneratorSet generators(const polyfan::Caging& pi, Subset i, const std::vector<Subset>& flag, Subset j) {
  const std::size_t m = pi.source().size();
  GeneratorSet g;
  for (std::size_t a = 0; a < m; ++a) {
    if (!bit_in(i, a)) continue;
    Vec v(m, 0);
    v[a] = 1;
    g.push_back(v);
  }
  for (auto f : flag) {
    Vec v(m, 0);
    for (std::size_t a = 0; a < m; ++a) v[a] = bit_in(f, pi.image(a)) ? 0 : -1;
    g.push_back(v);
  }
  for (std::size_t e = 0; e < pi.target().size(); ++e) {
    if (!bit_in(j, e)) continue;
    Vec v(m, 0);
    for (std::size_t a = 0; a < m; ++a) v[a] = pi.image(a) == e ? -1 : 0;
    g.push_back(v);
  }
  std::sort(g.begin(), g.end());
  return g;
}

// Full-dimensional cones among all compatible triples with |top| = s.
inline std::set<GeneratorSet> delta_maximal_cones(const polyfan::Caging& pi, std::size_t s) {
  const std::size_t m = pi.source().size();
  const std::size_t n = pi.target().size();
  std::set<GeneratorSet> out;
  // All strictly increasing chains of proper subsets of top.
  std::vector<std::vector<Subset>> chains;
  std::vector<Subset> chain;
  for (Subset top = 0; top < (Subset{1} << n); ++top) {
    if (static_cast<std::size_t>(__builtin_popcountll(top)) != s) continue;
    chains.clear();
    auto extend = [&](auto&& self) -> void {
      chains.push_back(chain);
      for (Subset f = 0; f < (Subset{1} << n); ++f) {
        if ((f & ~top) || f == top) continue;
        if (!chain.empty() && ((chain.back() & ~f) || chain.back() == f)) continue;
        chain.push_back(f);
        self(self);
        chain.pop_back();
      }
    };
    extend(extend);
    for (Subset j = 0; j < (Subset{1} << n); ++j) {
      if (j & top) continue;
      for (Subset i = 0; i < (Subset{1} << m); ++i) {
        for (const auto& flag : chains) {
          if (!compatible(pi, i, flag, top, j)) continue;
          auto g = generators(pi, i, flag, j);
          if (g.size() == m && rank(g) == m) out.insert(g);
        }
      }
    }
  }
  return out;
}

inline std::set<GeneratorSet> maximal_cones(const polyfan::Fan& f) {
  std::set<GeneratorSet> out;
  for (std::size_t c = 0; c < f.num_maximal_cones(); ++c) {
    GeneratorSet g;
    for (const auto& v : f.generators(c)) g.push_back(v.coords);
    std::sort(g.begin(), g.end());
    out.insert(g);
  }
  return out;
}

// Vertices of {x >= 0, x_S <= f(S)} (with x_E = f(E) in base mode): lattice
// points in the box whose tight constraints have full rank.
inline std::set<Vec> vertices(const polyfan::RankFunction& f, bool base) {
  const std::size_t n = f.size();
  const Subset all = (Subset{1} << n) - 1;
  std::set<Vec> out;
  Vec x(n, 0);
  auto visit = [&](auto&& self, std::size_t k) -> void {
    if (k < n) {
      for (std::int64_t v = 0; v <= f(Subset{1} << k); ++v) {
        x[k] = v;
        self(self, k + 1);
      }
      return;
    }
    std::vector<Vec> tight;
    for (Subset s = 1; s <= all; ++s) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += bit_in(s, i) ? x[i] : 0;
      if (sum > f(s)) return;
      if (sum == f(s)) {
        Vec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = bit_in(s, i);
        tight.push_back(row);
      }
      if (base && s == all && sum != f(s)) return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) {
        Vec row(n, 0);
        row[i] = 1;
        tight.push_back(row);
      }
    }
    if (rank(tight) == n) out.insert(x);
  };
  visit(visit, 0);
  return out;
}

// Nested sets of a building set given as a member list: subfamilies of the
// non-maximal members whose members are pairwise nested or disjoint and
// where no union of two or more pairwise disjoint members is a member.
inline std::size_t nested_set_count(const std::vector<Subset>& members, Subset ground) {
  std::vector<Subset> pool;
  for (auto s : members) {
    if (s != ground) pool.push_back(s);
  }
  const std::set<Subset> building(members.begin(), members.end());
  std::size_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pool.size()); ++pick) {
    std::vector<Subset> n;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (bit_in(pick, k)) n.push_back(pool[k]);
    }
    bool ok = true;
    for (std::size_t a = 0; a < n.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < n.size() && ok; ++b) {
        const bool nested = !(n[a] & ~n[b]) || !(n[b] & ~n[a]);
        if (!nested && (n[a] & n[b])) ok = false;
      }
    }
    // Every subfamily of pairwise disjoint members with at least two elements.
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n.size()) && ok; ++sub) {
      if (__builtin_popcountll(sub) < 2) continue;
      Subset u = 0;
      bool disjoint = true;
      for (std::size_t k = 0; k < n.size(); ++k) {
        if (!bit_in(sub, k)) continue;
        if (u & n[k]) disjoint = false;
        u |= n[k];
      }
      if (disjoint && building.count(u)) ok = false;
    }
    count += ok;
  }
  return count;
}

}  // namespace oracle

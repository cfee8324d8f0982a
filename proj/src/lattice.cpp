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

#include "polyfan/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace polyfan {

GroundOrder::GroundOrder(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate ground label '" + labels_[i] + "'");
    }
  }
}

GroundOrder GroundOrder::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundOrder(std::move(labels));
}

std::optional<std::size_t> GroundOrder::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundOrder::index_or_throw(const std::string& label) const {
  auto i = index(label);
  if (!i) throw Error(ErrorCode::kInvalidArgument, "unknown label '" + label + "'");
  return *i;
}

AmbientSpace::AmbientSpace(GroundOrder ground, AmbientMode mode)
    : ground_(std::make_shared<const GroundOrder>(std::move(ground))), mode_(mode) {
  if (mode_ == AmbientMode::kQuotientByAllOnes && ground_->size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "quotient ambient needs a nonempty ground set");
  }
}

std::size_t AmbientSpace::dim() const {
  return is_quotient() ? ground_->size() - 1 : ground_->size();
}

bool IntVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

IntVector IntVector::operator+(const IntVector& o) const {
  IntVector r{coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked::add(r.coords[i], o.coords[i]);
  return r;
}

IntVector IntVector::operator-(const IntVector& o) const {
  IntVector r{coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked::sub(r.coords[i], o.coords[i]);
  return r;
}

IntVector IntVector::operator-() const { return scaled(-1); }

IntVector IntVector::scaled(std::int64_t k) const {
  IntVector r{coords};
  for (auto& c : r.coords) c = checked::mul(c, k);
  return r;
}

std::int64_t IntVector::dot(const IntVector& o) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) s = checked::add(s, checked::mul(coords[i], o.coords[i]));
  return s;
}

std::string IntVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

IntVector canonical_vector(std::span<const std::int64_t> raw, const AmbientSpace& ambient) {
  const std::size_t n = ambient.ground().size();
  if (raw.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "vector length does not match ground set");
  }
  if (!ambient.is_quotient()) return IntVector{{raw.begin(), raw.end()}};
  IntVector v;
  v.coords.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) v.coords[i] = checked::sub(raw[i], raw[n - 1]);
  return v;
}

IntVector indicator_vector(std::uint64_t subset, const AmbientSpace& ambient) {
  std::vector<std::int64_t> raw(ambient.ground().size(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = (subset >> i) & 1U;
  return canonical_vector(raw, ambient);
}

IntVector make_primitive(IntVector v) {
  std::int64_t g = 0;
  for (auto c : v.coords) g = checked::gcd(g, c);
  if (g == 0) throw Error(ErrorCode::kZeroVector, "zero vector has no primitive multiple");
  for (auto& c : v.coords) c /= g;
  return v;
}

bool is_primitive(const IntVector& v) {
  std::int64_t g = 0;
  for (auto c : v.coords) g = checked::gcd(g, c);
  return g == 1;
}

IntVector primitive_vector(std::span<const std::int64_t> raw, const AmbientSpace& ambient) {
  return make_primitive(canonical_vector(raw, ambient));
}

namespace {

// Fraction-free elimination; returns the rank and leaves the echelon form in m.
std::size_t bareiss_rank(Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = checked::exact_div(
            checked::sub(checked::mul(m[rank][c], m[r][k]), checked::mul(m[r][c], m[rank][k])), prev);
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

Matrix to_matrix(const std::vector<IntVector>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(r.coords);
  return m;
}

}  // namespace

std::size_t matrix_rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  Matrix m = to_matrix(rows);
  return bareiss_rank(m);
}

std::int64_t determinant(const std::vector<IntVector>& square_rows) {
  const std::size_t n = square_rows.size();
  if (n == 0) return 1;
  Matrix m = to_matrix(square_rows);
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t k = c + 1; k < n; ++k) {
        m[r][k] = checked::exact_div(
            checked::sub(checked::mul(m[c][c], m[r][k]), checked::mul(m[r][c], m[c][k])), prev);
      }
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign > 0 ? m[n - 1][n - 1] : checked::neg(m[n - 1][n - 1]);
}

std::vector<std::int64_t> smith_invariant_factors(const std::vector<IntVector>& rows) {
  Matrix m = to_matrix(rows);
  const std::size_t nr = m.size();
  const std::size_t nc = nr ? m[0].size() : 0;
  std::vector<std::int64_t> factors;

  auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t k = 0; k < nc; ++k) m[dst][k] = checked::sub(m[dst][k], checked::mul(q, m[src][k]));
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t k = 0; k < nr; ++k) m[k][dst] = checked::sub(m[k][dst], checked::mul(q, m[k][src]));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  };

  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&](bool whole_block) {
      std::size_t bi = nr, bj = nc;
      for (std::size_t i = t; i < nr; ++i) {
        for (std::size_t j = t; j < nc; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (m[i][j] != 0 && (bi == nr || checked::abs(m[i][j]) < checked::abs(m[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == nr) return false;
      std::swap(m[bi], m[t]);
      swap_cols(bj, t);
      return true;
    };
    if (!move_min_to_pivot(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (m[i][t] != 0) {
          row_axpy(i, t, m[i][t] / m[t][t]);
          if (m[i][t] != 0) clean = false;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (m[t][j] != 0) {
          col_axpy(j, t, m[t][j] / m[t][t]);
          if (m[t][j] != 0) clean = false;
        }
      }
      if (!clean) {
        move_min_to_pivot(false);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < nr && divisible; ++i) {
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            row_axpy(t, i, -1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    factors.push_back(checked::abs(m[t][t]));
  }
  return factors;
}

std::optional<std::vector<int>> coefficient_signs(const std::vector<IntVector>& generators,
                                                  const IntVector& point) {
  const std::size_t k = generators.size();
  const std::size_t d = point.size();
  if (k == 0) {
    if (point.is_zero()) return std::vector<int>{};
    return std::nullopt;
  }
  // Pick k coordinates on which the generators are independent.
  std::vector<std::size_t> picked;
  std::vector<IntVector> sub_rows;
  for (std::size_t r = 0; r < d && picked.size() < k; ++r) {
    IntVector row;
    row.coords.resize(k);
    for (std::size_t i = 0; i < k; ++i) row.coords[i] = generators[i][r];
    sub_rows.push_back(row);
    if (matrix_rank(sub_rows) == sub_rows.size()) {
      picked.push_back(r);
    } else {
      sub_rows.pop_back();
    }
  }
  if (picked.size() < k) {
    throw Error(ErrorCode::kDependentGenerators, "generators are linearly dependent");
  }
  const std::int64_t det = determinant(sub_rows);
  std::vector<std::int64_t> numer(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto replaced = sub_rows;
    for (std::size_t r = 0; r < k; ++r) replaced[r].coords[i] = point[picked[r]];
    numer[i] = determinant(replaced);
  }
  // det * point must equal sum numer_i * g_i on every coordinate.
  for (std::size_t r = 0; r < d; ++r) {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < k; ++i) lhs = checked::add(lhs, checked::mul(numer[i], generators[i][r]));
    if (lhs != checked::mul(det, point[r])) return std::nullopt;
  }
  const int det_sign = det > 0 ? 1 : -1;
  std::vector<int> signs(k);
  for (std::size_t i = 0; i < k; ++i) signs[i] = ((numer[i] > 0) - (numer[i] < 0)) * det_sign;
  return signs;
}

Cone::Cone(AmbientSpace ambient, std::vector<IntVector> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != ambient_.dim()) {
      throw Error(ErrorCode::kInvalidArgument, "generator dimension mismatch");
    }
    if (!is_primitive(g)) {
      throw Error(ErrorCode::kInvalidArgument, "generator " + g.str() + " is not primitive");
    }
  }
  std::sort(generators_.begin(), generators_.end());
  if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end() ||
      matrix_rank(generators_) != generators_.size()) {
    throw Error(ErrorCode::kDependentGenerators, "cone generators are linearly dependent");
  }
}

bool Cone::contains(const IntVector& point) const {
  auto signs = coefficient_signs(generators_, point);
  return signs && std::all_of(signs->begin(), signs->end(), [](int s) { return s >= 0; });
}

bool Cone::relint_contains(const IntVector& point) const {
  auto signs = coefficient_signs(generators_, point);
  return signs && std::all_of(signs->begin(), signs->end(), [](int s) { return s > 0; });
}

bool Cone::contains(const Cone& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const IntVector& g) { return contains(g); });
}

IntVector Cone::interior_point() const {
  IntVector s{std::vector<std::int64_t>(ambient_.dim(), 0)};
  for (const auto& g : generators_) s = s + g;
  return s;
}

bool cone_is_smooth(const Cone& cone) {
  if (cone.is_zero()) return true;
  const auto factors = smith_invariant_factors(cone.generators());
  return factors.size() == cone.dim() &&
         std::all_of(factors.begin(), factors.end(), [](auto f) { return f == 1; });
}

Matrix unimodular_completion(const IntVector& v) {
  const std::size_t d = v.size();
  if (!is_primitive(v)) throw Error(ErrorCode::kInvalidArgument, "vector is not primitive");
  Matrix u(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;
  auto w = v.coords;
  for (;;) {
    std::size_t pivot = d;
    for (std::size_t i = 0; i < d; ++i) {
      if (w[i] != 0 && (pivot == d || checked::abs(w[i]) < checked::abs(w[pivot]))) pivot = i;
    }
    bool single = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == pivot || w[j] == 0) continue;
      single = false;
      const std::int64_t q = w[j] / w[pivot];
      w[j] = checked::sub(w[j], checked::mul(q, w[pivot]));
      for (std::size_t k = 0; k < d; ++k) u[j][k] = checked::sub(u[j][k], checked::mul(q, u[pivot][k]));
    }
    if (single) {
      std::swap(u[pivot], u[0]);
      std::swap(w[pivot], w[0]);
      if (w[0] < 0) {
        for (auto& x : u[0]) x = checked::neg(x);
      }
      return u;
    }
  }
}

IntVector apply(const Matrix& m, const IntVector& v) {
  IntVector r;
  r.coords.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s = checked::add(s, checked::mul(m[i][k], v[k]));
    r.coords[i] = s;
  }
  return r;
}

}  // namespace polyfan

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

#include "polyfan/checked.hpp"

#include <cctype>

namespace polyfan {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDependentGenerators: return "DependentGenerators";
    case ErrorCode::kConeNotInFan: return "ConeNotInFan";
    case ErrorCode::kAmbientMismatch: return "AmbientMismatch";
    case ErrorCode::kNotARay: return "NotARay";
    case ErrorCode::kMissingSingleton: return "MissingSingleton";
    case ErrorCode::kUnionViolation: return "UnionViolation";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kNotSubmodular: return "NotSubmodular";
    case ErrorCode::kInvalidTriple: return "InvalidTriple";
    case ErrorCode::kRayAbsent: return "RayAbsent";
    case ErrorCode::kBadCage: return "BadCage";
    case ErrorCode::kNonToricLocus: return "NonToricLocus";
    case ErrorCode::kNotInDomain: return "NotInDomain";
    case ErrorCode::kNotARefinement: return "NotARefinement";
    case ErrorCode::kEmptyVertexList: return "EmptyVertexList";
    case ErrorCode::kInternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  const std::int64_t g = checked::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
  const std::int64_t g = checked::gcd(den_, o.den_);
  const std::int64_t l = checked::mul(den_ / g, o.den_);
  return Rational(checked::add(checked::mul(num_, l / den_),
                               checked::mul(o.num_, l / o.den_)),
                  l);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = checked::gcd(num_, o.den_);
  const std::int64_t g2 = checked::gcd(o.num_, den_);
  const std::int64_t a = g1 == 0 ? num_ : num_ / g1;
  const std::int64_t d = g1 == 0 ? o.den_ : o.den_ / g1;
  const std::int64_t c = g2 == 0 ? o.num_ : o.num_ / g2;
  const std::int64_t b = g2 == 0 ? den_ : den_ / g2;
  return Rational(checked::mul(a, c), checked::mul(b, d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const int s = (*this - o).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::kParse, "bad number '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kParse, "bad number '" + std::string(whole) + "'");
    }
    v = checked::add(checked::mul(v, 10), c - '0');
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    r = Rational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto ip = s.substr(0, dot);
    const auto fp = s.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den = checked::mul(den, 10);
    const std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
    const std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
    r = Rational(checked::add(checked::mul(whole, den), frac), den);
  } else {
    r = Rational(parse_int(s, text));
  }
  return negative ? -r : r;
}

}  // namespace polyfan

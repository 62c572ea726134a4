/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "utri/cpoly.hpp"

#include <algorithm>

#include "expr_parser.hpp"

namespace utri {

VarKey VarKey::entry(std::uint32_t j, std::uint32_t k, std::uint32_t i) {
  if (j == 0 || k == 0 || i == 0 || j > k) {
    raise(ErrorKind::invalid_argument, "entry key needs 1 <= j <= k and i >= 1");
  }
  return VarKey{Kind::entry, j, k, i};
}

VarKey VarKey::diag(std::uint32_t j, std::uint32_t i) {
  if (j == 0 || i == 0) raise(ErrorKind::invalid_argument, "diagonal key indices are 1-based");
  return VarKey{Kind::diag, j, i, 0};
}

VarKey VarKey::out(std::uint32_t s, std::uint32_t t) {
  if (s == 0 || s >= t) raise(ErrorKind::invalid_argument, "output key needs 1 <= s < t");
  return VarKey{Kind::out, s, t, 0};
}

std::string VarKey::to_string() const {
  switch (kind) {
    case Kind::entry: return "x[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
    case Kind::diag: return "z[" + std::to_string(a) + "," + std::to_string(b) + "]";
    case Kind::out: return "y[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
  return {};
}

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& [k, e] : m) d += e;
  return d;
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  const auto dx = total_degree(x);
  const auto dy = total_degree(y);
  if (dx != dy) return dx < dy;
  return x < y;
}

namespace {

Monomial multiply_monomials(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, x.end());
  out.insert(out.end(), j, y.end());
  return out;
}

}  // namespace

CPolynomial CPolynomial::constant(const Field& field, const FieldValue& c) {
  CPolynomial p(field);
  p.add_term({}, c);
  return p;
}

CPolynomial CPolynomial::variable(const Field& field, const VarKey& key) {
  CPolynomial p(field);
  p.terms_.emplace(Monomial{{key, 1}}, field.one());
  return p;
}

FieldValue CPolynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? field_.zero() : it->second;
}

std::uint32_t CPolynomial::degree_in(const VarKey& key) const {
  std::uint32_t d = 0;
  for (const auto& [mono, c] : terms_) {
    for (const auto& [k, e] : mono) {
      if (k == key) d = std::max(d, e);
    }
  }
  return d;
}

std::uint32_t CPolynomial::total_degree() const {
  return terms_.empty() ? 0 : utri::total_degree(terms_.rbegin()->first);
}

std::set<VarKey> CPolynomial::variables() const {
  std::set<VarKey> out;
  for (const auto& [mono, c] : terms_) {
    for (const auto& [k, e] : mono) out.insert(k);
  }
  return out;
}

void CPolynomial::add_term(const Monomial& mono, const FieldValue& c) {
  field_.check_member(c);
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) it->second += c;
  if (field_.is_zero(it->second)) terms_.erase(it);
}

void CPolynomial::check_compatible(const CPolynomial& other) const {
  if (!(field_ == other.field_)) raise(ErrorKind::field_mismatch, field_.name() + " vs " + other.field_.name());
}

CPolynomial CPolynomial::scaled(const FieldValue& c) const {
  CPolynomial out(field_);
  if (field_.is_zero(c)) return out;
  for (const auto& [mono, v] : terms_) out.add_term(mono, v * c);
  return out;
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& b) {
  check_compatible(b);
  for (const auto& [mono, c] : b.terms_) add_term(mono, c);
  return *this;
}

CPolynomial operator+(const CPolynomial& a, const CPolynomial& b) {
  CPolynomial out = a;
  out += b;
  return out;
}

CPolynomial operator-(const CPolynomial& a) { return a.scaled(-a.field_.one()); }

CPolynomial operator-(const CPolynomial& a, const CPolynomial& b) { return a + (-b); }

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
  a.check_compatible(b);
  CPolynomial out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
  }
  return out;
}

std::string CPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const FieldValue one = field_.one();
  for (const auto& [mono, c] : terms_) {
    bool negative = false;
    FieldValue mag = c;
    if (c.kind() == FieldKind::rational && c.rational() < 0) {
      negative = true;
      mag = -c;
    }
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (const auto& [k, e] : mono) {
      if (!factors.empty()) factors += '*';
      factors += k.to_string();
      if (e > 1) factors += '^' + std::to_string(e);
    }
    const bool unit = mag == one;
    if (!unit || factors.empty()) {
      out += c.kind() == FieldKind::complex ? "(" + mag.to_string() + ")" : mag.to_string();
      if (!factors.empty()) out += '*';
    }
    out += factors;
  }
  return out;
}

bool is_zero(const CPolynomial& c) { return c.is_zero(); }

FieldValue eval_with(const CPolynomial& c, const std::function<const FieldValue*(const VarKey&)>& lookup) {
  FieldValue acc = c.field().zero();
  for (const auto& [mono, coeff] : c.terms()) {
    FieldValue term = coeff;
    for (const auto& [k, e] : mono) {
      const FieldValue* v = lookup(k);
      if (v == nullptr) raise(ErrorKind::unbound_variable, "no value bound for " + k.to_string());
      term *= e == 1 ? *v : pow(*v, e);
    }
    acc += term;
  }
  return acc;
}

FieldValue eval_full(const CPolynomial& c, const Assignment& assignment) {
  return eval_with(c, [&](const VarKey& k) -> const FieldValue* {
    auto it = assignment.find(k);
    return it == assignment.end() ? nullptr : &it->second;
  });
}

CPolynomial eval_partial(const CPolynomial& c, const Assignment& assignment) {
  CPolynomial out(c.field());
  for (const auto& [mono, coeff] : c.terms()) {
    FieldValue factor = coeff;
    Monomial rest;
    for (const auto& [k, e] : mono) {
      auto it = assignment.find(k);
      if (it == assignment.end()) {
        rest.emplace_back(k, e);
      } else {
        factor *= e == 1 ? it->second : pow(it->second, e);
      }
    }
    out.add_term(rest, factor);
  }
  return out;
}

CPolynomial coefficient_of(const CPolynomial& c, std::span<const VarKey> vars) {
  std::vector<VarKey> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    raise(ErrorKind::invalid_argument, "coefficient_of needs distinct variables");
  }
  CPolynomial out(c.field());
  for (const auto& [mono, coeff] : c.terms()) {
    std::size_t hits = 0;
    Monomial rest;
    for (const auto& [k, e] : mono) {
      if (std::binary_search(sorted.begin(), sorted.end(), k)) {
        if (e >= 2) raise(ErrorKind::non_linear_variable, k.to_string() + " occurs with exponent " + std::to_string(e));
        ++hits;
      } else {
        rest.emplace_back(k, e);
      }
    }
    if (hits == sorted.size()) out.add_term(rest, coeff);
  }
  return out;
}

CPolynomial rename_blocks(const CPolynomial& c, std::span<const std::uint32_t> block_map) {
  CPolynomial out(c.field());
  for (const auto& [mono, coeff] : c.terms()) {
    Monomial renamed;
    for (auto [k, e] : mono) {
      if (k.kind == VarKey::Kind::diag) {
        if (k.a > block_map.size()) {
          raise(ErrorKind::precondition, k.to_string() + " is outside the mapped blocks");
        }
        k.a = block_map[k.a - 1];
      }
      renamed.emplace_back(k, e);
    }
    std::sort(renamed.begin(), renamed.end());
    // merge keys that collapsed onto the same block
    Monomial merged;
    for (const auto& [k, e] : renamed) {
      if (!merged.empty() && merged.back().first == k) {
        merged.back().second += e;
      } else {
        merged.emplace_back(k, e);
      }
    }
    out.add_term(merged, coeff);
  }
  return out;
}

CPolynomial subset_product(const CPolynomial& p, std::size_t s, std::size_t n) {
  if (p.is_zero()) raise(ErrorKind::zero_input, "subset_product of the zero polynomial");
  if (s < 1 || s > n) raise(ErrorKind::precondition, "subset_product needs 1 <= s <= n");
  for (const auto& k : p.variables()) {
    if (k.kind != VarKey::Kind::diag || k.a > s) {
      raise(ErrorKind::precondition, "subset_product input may only use z[j,i] with j <= " + std::to_string(s));
    }
  }
  CPolynomial acc = CPolynomial::constant(p.field(), p.field().one());
  std::vector<std::uint32_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<std::uint32_t>(i + 1);
  for (;;) {
    acc = acc * rename_blocks(p, idx);
    // next increasing combination
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return acc;
}

namespace {

struct CPolyOps {
  using Value = CPolynomial;

  const Field& field;
  bool has_commutator = false;

  Value constant(const mpz_class& num, const mpz_class& den) {
    return CPolynomial::constant(field, field.from_ratio(num, den));
  }
  bool starts_variable(char c) const { return c == 'x' || c == 'y' || c == 'z'; }
  const char* atom_description() const { return "variable x[j,k,i], z[j,i] or y[s,t], coefficient or '('"; }
  Value variable(detail::Cursor& cur) {
    const char family = cur.peek();
    const std::size_t at = cur.position();
    cur.advance();
    cur.expect('[', "'['");
    std::vector<std::uint32_t> idx{cur.small_natural("index")};
    while (cur.consume(',')) idx.push_back(cur.small_natural("index"));
    cur.expect(']', "']'");
    const std::size_t want = family == 'x' ? 3 : 2;
    if (idx.size() != want) throw SyntaxError(at, std::to_string(want) + " indices for '" + family + "'");
    try {
      switch (family) {
        case 'x': return CPolynomial::variable(field, VarKey::entry(idx[0], idx[1], idx[2]));
        case 'z': return CPolynomial::variable(field, VarKey::diag(idx[0], idx[1]));
        default: return CPolynomial::variable(field, VarKey::out(idx[0], idx[1]));
      }
    } catch (const Error&) {
      throw SyntaxError(at, "valid indices for '" + std::string(1, family) + "'");
    }
  }
  Value add(Value a, const Value& b) { return a + b; }
  Value sub(Value a, const Value& b) { return a - b; }
  Value neg(Value a) { return -a; }
  Value mul(const Value& a, const Value& b) { return a * b; }
};

}  // namespace

CPolynomial parse_cpolynomial(std::string_view text, const Field& field) {
  CPolyOps ops{field};
  detail::ExpressionParser<CPolyOps> parser(text, ops);
  return parser.parse();
}

}  // namespace utri

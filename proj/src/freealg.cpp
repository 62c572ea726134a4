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

#include "utri/freealg.hpp"

#include <algorithm>

#include "expr_parser.hpp"

namespace utri {

NcPolynomial::NcPolynomial(Field field, std::size_t m) : field_(std::move(field)), m_(m) {
  if (m_ == 0) raise(ErrorKind::invalid_argument, "a polynomial needs at least one variable");
}

NcPolynomial NcPolynomial::variable(Field field, std::size_t m, std::uint32_t i) {
  NcPolynomial p(field, m);
  if (i == 0 || i > m) raise(ErrorKind::variable_out_of_range, "x" + std::to_string(i) + " with m = " + std::to_string(m));
  p.terms_.emplace(Word{i}, field.one());
  return p;
}

NcPolynomial NcPolynomial::from_terms(Field field, std::size_t m,
                                      std::span<const std::pair<Word, FieldValue>> terms) {
  NcPolynomial p(std::move(field), m);
  for (const auto& [w, c] : terms) {
    if (w.empty()) raise(ErrorKind::constant_term, "constant term in a polynomial that must have none");
    for (auto i : w) {
      if (i == 0 || i > m) {
        raise(ErrorKind::variable_out_of_range, "x" + std::to_string(i) + " with m = " + std::to_string(m));
      }
    }
    p.field_.check_member(c);
    p.accumulate(w, c);
  }
  return p;
}

FieldValue NcPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

void NcPolynomial::accumulate(const Word& w, const FieldValue& c) {
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second = it->second + c;
  if (field_.is_zero(it->second)) terms_.erase(it);
}

void NcPolynomial::check_compatible(const NcPolynomial& other) const {
  if (!(field_ == other.field_)) raise(ErrorKind::field_mismatch, field_.name() + " vs " + other.field_.name());
  if (m_ != other.m_) {
    raise(ErrorKind::arity_mismatch, "m = " + std::to_string(m_) + " vs m = " + std::to_string(other.m_));
  }
}

NcPolynomial NcPolynomial::scaled(const FieldValue& c) const {
  field_.check_member(c);
  NcPolynomial out(field_, m_);
  if (field_.is_zero(c)) return out;
  for (const auto& [w, v] : terms_) out.accumulate(w, v * c);
  return out;
}

NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b) {
  a.check_compatible(b);
  NcPolynomial out = a;
  for (const auto& [w, c] : b.terms_) out.accumulate(w, c);
  return out;
}

NcPolynomial operator-(const NcPolynomial& a) { return a.scaled(-a.field_.one()); }

NcPolynomial operator-(const NcPolynomial& a, const NcPolynomial& b) { return a + (-b); }

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  a.check_compatible(b);
  NcPolynomial out(a.field_, a.m_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.accumulate(w, ca * cb);
    }
  }
  return out;
}

NcPolynomial add(const NcPolynomial& a, const NcPolynomial& b) { return a + b; }
NcPolynomial scale(const FieldValue& c, const NcPolynomial& p) { return p.scaled(c); }
NcPolynomial multiply(const NcPolynomial& a, const NcPolynomial& b) { return a * b; }
NcPolynomial commutator(const NcPolynomial& a, const NcPolynomial& b) { return a * b - b * a; }

namespace {

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string NcPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const FieldValue one = field_.one();
  for (const auto& [w, c] : terms_) {
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
    if (!(mag == one)) {
      out += c.kind() == FieldKind::complex ? "(" + mag.to_string() + ")" : mag.to_string();
      out += '*';
    }
    out += word_to_string(w);
  }
  return out;
}

namespace {

// Free-algebra expressions during parsing may carry a constant (empty word).
struct NcOps {
  using Value = std::map<Word, FieldValue, WordOrder>;

  const Field& field;
  std::size_t m;
  std::uint32_t max_index = 0;
  bool has_commutator = true;

  static void put(Value& v, const Word& w, const FieldValue& c, const Field& f) {
    auto [it, inserted] = v.try_emplace(w, c);
    if (!inserted) it->second = it->second + c;
    if (f.is_zero(it->second)) v.erase(it);
  }

  Value constant(const mpz_class& num, const mpz_class& den) {
    Value v;
    put(v, Word{}, field.from_ratio(num, den), field);
    return v;
  }
  bool starts_variable(char c) const { return c == 'x'; }
  const char* atom_description() const { return "variable x<k>, coefficient, '(' or '['"; }
  Value variable(detail::Cursor& cur) {
    cur.advance();
    const std::size_t at = cur.position();
    const std::uint32_t i = cur.small_natural("variable index after 'x'");
    if (i == 0 || (m != 0 && i > m)) {
      raise(ErrorKind::variable_out_of_range, "x" + std::to_string(i) + " at position " + std::to_string(at) +
                                                  " is outside x1..x" + std::to_string(m));
    }
    max_index = std::max(max_index, i);
    Value v;
    v.emplace(Word{i}, field.one());
    return v;
  }
  Value add(Value a, const Value& b) {
    for (const auto& [w, c] : b) put(a, w, c, field);
    return a;
  }
  Value neg(Value a) {
    for (auto& [w, c] : a) c = -c;
    return a;
  }
  Value sub(Value a, const Value& b) { return add(std::move(a), neg(b)); }
  Value mul(const Value& a, const Value& b) {
    Value out;
    for (const auto& [wa, ca] : a) {
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        put(out, w, ca * cb, field);
      }
    }
    return out;
  }
};

}  // namespace

NcPolynomial parse_polynomial(std::string_view text, std::size_t m, const Field& field) {
  NcOps ops{field, m};
  detail::ExpressionParser<NcOps> parser(text, ops);
  auto raw = parser.parse();
  if (raw.count(Word{}) != 0) {
    raise(ErrorKind::constant_term, "polynomial '" + std::string(text) + "' has a nonzero constant term");
  }
  std::size_t arity = m != 0 ? m : std::max<std::size_t>(ops.max_index, 1);
  std::vector<std::pair<Word, FieldValue>> terms(raw.begin(), raw.end());
  return NcPolynomial::from_terms(field, arity, terms);
}

FieldValue eval_scalar(const NcPolynomial& p, std::span<const FieldValue> point) {
  if (point.size() != p.arity()) {
    raise(ErrorKind::arity_mismatch, "point has " + std::to_string(point.size()) + " coordinates, m = " +
                                         std::to_string(p.arity()));
  }
  for (const auto& v : point) p.field().check_member(v);
  FieldValue acc = p.field().zero();
  for (const auto& [w, c] : p.terms()) {
    FieldValue term = c;
    for (auto i : w) term *= point[i - 1];
    acc += term;
  }
  return acc;
}

}  // namespace utri

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

#ifndef UTRI_FREEALG_HPP
#define UTRI_FREEALG_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "utri/field.hpp"

namespace utri {

/// A word x_{i_1} ... x_{i_k} stored as its 1-based variable indices.
using Word = std::vector<std::uint32_t>;

/// Length first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial with zero constant term over a Field:
///
///   p(x_1, ..., x_m) = sum over nonempty words w of lambda_w * w.
///
/// Stored sparsely; no zero coefficient and no empty word is ever kept.
class NcPolynomial {
 public:
  using TermMap = std::map<Word, FieldValue, WordOrder>;

  NcPolynomial(Field field, std::size_t m);

  /// The polynomial x_i.
  static NcPolynomial variable(Field field, std::size_t m, std::uint32_t i);
  /// Builds from (word, coefficient) pairs, summing repeats and dropping zeros.
  static NcPolynomial from_terms(Field field, std::size_t m, std::span<const std::pair<Word, FieldValue>> terms);

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return m_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Maximum word length; 0 for the zero polynomial.
  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  /// Coefficient of w (zero if absent).
  FieldValue coefficient(const Word& w) const;

  NcPolynomial scaled(const FieldValue& c) const;

  friend NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator-(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator-(const NcPolynomial& a);
  /// Concatenation product; noncommutative.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
    return a.field_ == b.field_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  /// "x1*x2 - x2*x1", "3/2*x1^2*x2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void accumulate(const Word& w, const FieldValue& c);
  void check_compatible(const NcPolynomial& other) const;

  Field field_;
  std::size_t m_;
  TermMap terms_;
};

NcPolynomial add(const NcPolynomial& a, const NcPolynomial& b);
NcPolynomial scale(const FieldValue& c, const NcPolynomial& p);
NcPolynomial multiply(const NcPolynomial& a, const NcPolynomial& b);
NcPolynomial commutator(const NcPolynomial& a, const NcPolynomial& b);

/// Parses the ASCII polynomial grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' nat]
///   atom   := var | coeff | '(' expr ')' | '[' expr ',' expr ']'
///   var    := 'x' nat            coeff := integer ['/' integer]
///
/// with '[a,b]' the commutator ab - ba and '^k' the k-fold product.
/// m = 0 infers the arity from the largest variable index used.
/// Errors: SyntaxError, constant_term, variable_out_of_range.
NcPolynomial parse_polynomial(std::string_view text, std::size_t m, const Field& field);

/// Substitutes commuting scalars for x_1..x_m.
FieldValue eval_scalar(const NcPolynomial& p, std::span<const FieldValue> point);

}  // namespace utri

#endif  // UTRI_FREEALG_HPP

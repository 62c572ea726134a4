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

#ifndef UTRI_CPOLY_HPP
#define UTRI_CPOLY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "utri/field.hpp"

namespace utri {

/// A commuting variable. Three families share one ordered key space:
///   entry(j, k, i)  x[j,k,i]  entry (j,k) of the i-th matrix, j <= k
///   diag(j, i)      z[j,i]    component i of the j-th diagonal tuple
///   out(s, t)       y[s,t]    output coordinate (s,t) of the affine space, s < t
/// All indices are 1-based.
struct VarKey {
  enum class Kind : std::uint8_t { entry = 0, diag = 1, out = 2 };

  Kind kind = Kind::entry;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  static VarKey entry(std::uint32_t j, std::uint32_t k, std::uint32_t i);
  static VarKey diag(std::uint32_t j, std::uint32_t i);
  static VarKey out(std::uint32_t s, std::uint32_t t);

  std::uint32_t row() const { return a; }
  std::uint32_t col() const { return kind == Kind::entry ? b : a; }
  std::uint32_t slot() const { return kind == Kind::entry ? c : b; }

  std::string to_string() const;

  friend auto operator<=>(const VarKey&, const VarKey&) = default;
};

/// Sorted by key, exponents >= 1.
using Monomial = std::vector<std::pair<VarKey, std::uint32_t>>;

std::uint32_t total_degree(const Monomial& m);

/// Graded lexicographic order on monomials.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

using Assignment = std::map<VarKey, FieldValue>;

/// Sparse commutative polynomial over a Field in VarKey variables.
class CPolynomial {
 public:
  using TermMap = std::map<Monomial, FieldValue, MonomialOrder>;

  explicit CPolynomial(Field field) : field_(std::move(field)) {}

  static CPolynomial constant(const Field& field, const FieldValue& c);
  static CPolynomial variable(const Field& field, const VarKey& key);

  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  /// Value of the constant monomial (zero if absent).
  FieldValue constant_term() const;
  std::uint32_t degree_in(const VarKey& key) const;
  std::uint32_t total_degree() const;
  std::set<VarKey> variables() const;

  /// Adds c * mono, keeping canonical form.
  void add_term(const Monomial& mono, const FieldValue& c);

  CPolynomial scaled(const FieldValue& c) const;

  friend CPolynomial operator+(const CPolynomial& a, const CPolynomial& b);
  friend CPolynomial operator-(const CPolynomial& a, const CPolynomial& b);
  friend CPolynomial operator-(const CPolynomial& a);
  friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);
  CPolynomial& operator+=(const CPolynomial& b);
  friend bool operator==(const CPolynomial& a, const CPolynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// "3*x[1,2,1]*z[2,1]^2 - y[1,3]"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_compatible(const CPolynomial& other) const;

  Field field_;
  TermMap terms_;
};

bool is_zero(const CPolynomial& c);

/// Evaluates with a caller-supplied lookup; lookup returns nullptr for an
/// unbound key, which raises unbound_variable.
FieldValue eval_with(const CPolynomial& c, const std::function<const FieldValue*(const VarKey&)>& lookup);
FieldValue eval_full(const CPolynomial& c, const Assignment& assignment);
/// Substitutes the bound variables only.
CPolynomial eval_partial(const CPolynomial& c, const Assignment& assignment);
/// q with c = q * prod(vars) + (terms not divisible by prod(vars)).
/// Errors: non_linear_variable if some listed variable has exponent >= 2.
CPolynomial coefficient_of(const CPolynomial& c, std::span<const VarKey> vars);
/// Renames every diag(j, i) to diag(block_map[j-1], i); other keys unchanged.
CPolynomial rename_blocks(const CPolynomial& c, std::span<const std::uint32_t> block_map);
/// Product of p(z_{i_1}, ..., z_{i_s}) over all increasing s-subsets of
/// {1..n}; p must involve diag blocks 1..s only. Errors: zero_input.
CPolynomial subset_product(const CPolynomial& p, std::size_t s, std::size_t n);

/// Parses the expression grammar with x[j,k,i], z[j,i] and y[s,t] variables.
CPolynomial parse_cpolynomial(std::string_view text, const Field& field);

}  // namespace utri

#endif  // UTRI_CPOLY_HPP

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

#ifndef UTRI_ANALYSIS_HPP
#define UTRI_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "utri/cpoly.hpp"
#include "utri/freealg.hpp"
#include "utri/triangular.hpp"

namespace utri {

/// Slot sequence (i_1, ..., i_k), 1-based.
using SlotTuple = std::vector<std::uint32_t>;

/// Lazily computed coefficient polynomials p_{i_1..i_k} of one polynomial.
/// p_{i_1..i_k} lives in the diagonal variables z[1..k+1, 1..m] and is the
/// coefficient of the arc product x[1,2,i_1] x[2,3,i_2] ... x[k,k+1,i_k] in
/// entry (1, k+1) of p evaluated generically on T_{k+1}.
class CoefficientTable {
 public:
  explicit CoefficientTable(NcPolynomial p, std::size_t monomial_budget = kDefaultMonomialBudget);

  const NcPolynomial& polynomial() const noexcept { return p_; }

  /// All nonzero p_{i_1..i_k} of length k, keyed by slot tuple (lex order).
  const std::map<SlotTuple, CPolynomial>& level(std::size_t k);
  /// A single coefficient polynomial (zero if absent).
  CPolynomial coefficient(const SlotTuple& tuple);

 private:
  NcPolynomial p_;
  std::size_t budget_;
  std::map<std::size_t, std::map<SlotTuple, CPolynomial>> levels_;
};

/// True iff every entry of generic_evaluate(p, n) is the zero polynomial.
bool is_identity(const NcPolynomial& p, std::size_t n, std::size_t monomial_budget = kDefaultMonomialBudget);

struct OrderWitness {
  std::size_t size = 0;  // generic size r + 1
  std::size_t row = 0;
  std::size_t col = 0;
  CPolynomial entry{Field::rational()};
  /// A point where the entry is nonzero; absent when sampling found none
  /// (possible over very small prime fields).
  std::optional<Assignment> point;
};

struct OrderReport {
  /// ord(p); empty when p is an identity of every T_n with n <= max_n.
  std::optional<std::size_t> order;
  std::size_t max_n = 0;
  std::optional<OrderWitness> witness;

  bool cap_reached() const { return !order.has_value(); }
};

/// Least r with p an identity of T_r but not of T_{r+1}, searching sizes
/// 1..max_n (max_n = 0 means deg(p) + 1). Errors: precondition (p = 0).
OrderReport order(const NcPolynomial& p, std::size_t max_n = 0,
                  std::size_t monomial_budget = kDefaultMonomialBudget);

/// Coefficient polynomial p_{tuple} computed literally: entry (1, k+1) of
/// the full generic evaluation on T_{k+1}, every x variable off the chain
/// set to zero, then the coefficient of the chain arcs extracted.
CPolynomial coeff_poly(const NcPolynomial& p, const SlotTuple& tuple,
                       std::size_t monomial_budget = kDefaultMonomialBudget);

/// All r-tuples with nonzero coefficient polynomial, lexicographic.
/// Errors: precondition (r < 1), internal_inconsistency (none found).
std::vector<SlotTuple> leading_tuples(const NcPolynomial& p, std::size_t r);
std::vector<SlotTuple> leading_tuples(CoefficientTable& table, std::size_t r);

enum class ImageCase { dense_full, equals_band, dense_in_band, zero };

std::string to_string(ImageCase c);

struct Classification {
  ImageCase image_case = ImageCase::zero;
  std::optional<std::size_t> order;  // empty: unresolved below the cap
  std::size_t n = 0;
  int band = -1;              // the image lies in T_n^(band)
  std::size_t affine_dim = 0;  // dimension of T_n^(band)
};

/// Pure case split on (r, n).
Classification classify_order(std::size_t r, std::size_t n);
/// Errors: cap_reached when the order is unresolved and p is not an
/// identity of T_n.
Classification classify(const NcPolynomial& p, std::size_t n, std::size_t max_n = 0);

using Position = std::pair<std::uint32_t, std::uint32_t>;

/// U_{s,t} = {(j,k) : s <= j <= k <= t} and its reduced part
/// {(j,k) in U_{s,t} : j != k and (t - s) - (k - j) >= r - 1}.
struct BandIndexSet {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::uint32_t r = 0;
  std::set<Position> full;
  std::set<Position> reduced;
};

BandIndexSet band_sets(std::uint32_t s, std::uint32_t t, std::uint32_t r);

}  // namespace utri

#endif  // UTRI_ANALYSIS_HPP

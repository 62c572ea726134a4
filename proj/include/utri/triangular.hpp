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

#ifndef UTRI_TRIANGULAR_HPP
#define UTRI_TRIANGULAR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "utri/cpoly.hpp"
#include "utri/field.hpp"
#include "utri/freealg.hpp"

namespace utri {

template <class T>
struct RingOps;

template <>
struct RingOps<FieldValue> {
  static FieldValue zero(const Field& f) { return f.zero(); }
  static FieldValue one(const Field& f) { return f.one(); }
  static bool is_zero(const Field& f, const FieldValue& v) { return f.is_zero(v); }
  static FieldValue scaled(const FieldValue& v, const FieldValue& c) { return v * c; }
  static std::size_t weight(const FieldValue&) { return 1; }
};

template <>
struct RingOps<CPolynomial> {
  static CPolynomial zero(const Field& f) { return CPolynomial(f); }
  static CPolynomial one(const Field& f) { return CPolynomial::constant(f, f.one()); }
  static bool is_zero(const Field&, const CPolynomial& v) { return v.is_zero(); }
  static CPolynomial scaled(const CPolynomial& v, const FieldValue& c) { return v.scaled(c); }
  static std::size_t weight(const CPolynomial& v) { return v.size(); }
};

/// n x n upper triangular matrix over FieldValue or CPolynomial. Only the
/// positions 1 <= j <= k <= n are stored; indices are 1-based.
template <class T>
class UTMatrix {
 public:
  /// Empty placeholder of size 0.
  UTMatrix() : field_(Field::rational()), n_(0) {}
  UTMatrix(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
    if (n_ == 0) raise(ErrorKind::invalid_argument, "matrix size must be >= 1");
    entries_.assign(n_ * (n_ + 1) / 2, RingOps<T>::zero(field_));
  }

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return n_; }

  const T& at(std::size_t j, std::size_t k) const { return entries_[index(j, k)]; }
  T& at(std::size_t j, std::size_t k) { return entries_[index(j, k)]; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!RingOps<T>::is_zero(field_, e)) return false;
    }
    return true;
  }

  /// Membership in the band T_n^(t): entry (j,k) vanishes whenever k - j <= t.
  /// t = -1 imposes nothing.
  bool in_band(int t) const {
    for (std::size_t j = 1; j <= n_; ++j) {
      for (std::size_t k = j; k <= n_; ++k) {
        if (static_cast<int>(k - j) <= t && !RingOps<T>::is_zero(field_, at(j, k))) return false;
      }
    }
    return true;
  }

  /// Sum of entry sizes (monomial count for polynomial entries).
  std::size_t weight() const {
    std::size_t w = 0;
    for (const auto& e : entries_) w += RingOps<T>::weight(e);
    return w;
  }

  UTMatrix scaled(const FieldValue& c) const {
    UTMatrix out(field_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = RingOps<T>::scaled(entries_[i], c);
    return out;
  }

  friend UTMatrix operator+(const UTMatrix& a, const UTMatrix& b) {
    a.check_same(b);
    UTMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = out.entries_[i] + b.entries_[i];
    return out;
  }

  friend UTMatrix operator-(const UTMatrix& a, const UTMatrix& b) {
    a.check_same(b);
    UTMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = out.entries_[i] - b.entries_[i];
    return out;
  }

  friend UTMatrix operator*(const UTMatrix& a, const UTMatrix& b) {
    a.check_same(b);
    UTMatrix out(a.field_, a.n_);
    for (std::size_t j = 1; j <= a.n_; ++j) {
      for (std::size_t l = j; l <= a.n_; ++l) {
        const T& left = a.at(j, l);
        if (RingOps<T>::is_zero(a.field_, left)) continue;
        for (std::size_t k = l; k <= a.n_; ++k) {
          const T& right = b.at(l, k);
          if (RingOps<T>::is_zero(a.field_, right)) continue;
          out.at(j, k) = out.at(j, k) + left * right;
        }
      }
    }
    return out;
  }

  friend bool operator==(const UTMatrix& a, const UTMatrix& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(std::size_t j, std::size_t k) const {
    if (j < 1 || j > k || k > n_) {
      raise(ErrorKind::invalid_argument, "position (" + std::to_string(j) + "," + std::to_string(k) +
                                             ") is not upper triangular in size " + std::to_string(n_));
    }
    return (j - 1) * n_ - (j - 1) * (j - 2) / 2 + (k - j);
  }

  void check_same(const UTMatrix& b) const {
    if (n_ != b.n_) raise(ErrorKind::size_mismatch, "matrix sizes differ");
    if (!(field_ == b.field_)) raise(ErrorKind::field_mismatch, "matrix fields differ");
  }

  Field field_;
  std::size_t n_;
  std::vector<T> entries_;
};

using FieldMatrix = UTMatrix<FieldValue>;
using PolyMatrix = UTMatrix<CPolynomial>;

/// Entrywise comparison under the field's equality (tolerant for C).
bool approx_equal(const FieldMatrix& a, const FieldMatrix& b);
/// max |a_jk - b_jk| for complex matrices; 0/1 mismatch indicator otherwise.
double max_deviation(const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix identity_like(const FieldMatrix& shape);

namespace detail {

template <class T>
void check_tuple(std::span<const UTMatrix<T>> mats, std::size_t m) {
  if (mats.size() != m) {
    raise(ErrorKind::arity_mismatch, std::to_string(mats.size()) + " matrices for m = " + std::to_string(m));
  }
  for (const auto& u : mats) {
    if (u.size() != mats.front().size()) raise(ErrorKind::size_mismatch, "matrices of different sizes");
    if (!(u.field() == mats.front().field())) raise(ErrorKind::field_mismatch, "matrices over different fields");
  }
}

struct WordTrie {
  struct Node {
    std::map<std::uint32_t, std::size_t> children;
    const FieldValue* coefficient = nullptr;
  };
  std::vector<Node> nodes{Node{}};

  explicit WordTrie(const NcPolynomial& p) {
    for (const auto& [w, c] : p.terms()) {
      std::size_t cur = 0;
      for (auto letter : w) {
        auto it = nodes[cur].children.find(letter);
        if (it == nodes[cur].children.end()) {
          nodes.push_back(Node{});
          it = nodes[cur].children.emplace(letter, nodes.size() - 1).first;
        }
        cur = it->second;
      }
      nodes[cur].coefficient = &c;
    }
  }
};

}  // namespace detail

/// u_{i_1} ... u_{i_w} by repeated multiplication.
template <class T>
UTMatrix<T> word_product(std::span<const UTMatrix<T>> mats, const Word& word) {
  if (word.empty()) raise(ErrorKind::invalid_argument, "empty word");
  for (auto i : word) {
    if (i == 0 || i > mats.size()) raise(ErrorKind::variable_out_of_range, "word letter x" + std::to_string(i));
  }
  for (const auto& u : mats) {
    if (u.size() != mats.front().size()) raise(ErrorKind::size_mismatch, "matrices of different sizes");
  }
  UTMatrix<T> acc = mats[word[0] - 1];
  for (std::size_t l = 1; l < word.size(); ++l) acc = acc * mats[word[l] - 1];
  return acc;
}

/// Same product via the path sum: entry (s,t) is the sum over
/// s = j_1 <= j_2 <= ... <= j_{w+1} = t of a^{(i_1)}_{j_1 j_2} ... a^{(i_w)}_{j_w j_{w+1}}.
template <class T>
UTMatrix<T> word_product_paths(std::span<const UTMatrix<T>> mats, const Word& word) {
  if (word.empty()) raise(ErrorKind::invalid_argument, "empty word");
  for (auto i : word) {
    if (i == 0 || i > mats.size()) raise(ErrorKind::variable_out_of_range, "word letter x" + std::to_string(i));
  }
  for (const auto& u : mats) {
    if (u.size() != mats.front().size()) raise(ErrorKind::size_mismatch, "matrices of different sizes");
  }
  const auto& first = mats[word[0] - 1];
  const std::size_t n = first.size();
  UTMatrix<T> out(first.field(), n);
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t t = s; t <= n; ++t) {
      T sum = RingOps<T>::zero(first.field());
      // depth-first over weakly increasing paths from s that end at t
      auto recurse = [&](auto&& self, std::size_t depth, std::size_t from, const T& prefix) -> void {
        const auto& u = mats[word[depth] - 1];
        const bool last = depth + 1 == word.size();
        for (std::size_t to = last ? t : from; to <= t; ++to) {
          if (RingOps<T>::is_zero(first.field(), u.at(from, to))) continue;
          T next = prefix * u.at(from, to);
          if (last) {
            sum = sum + next;
          } else {
            self(self, depth + 1, to, next);
          }
        }
      };
      recurse(recurse, 0, s, RingOps<T>::one(first.field()));
      out.at(s, t) = sum;
    }
  }
  return out;
}

/// p(u_1, ..., u_m) by direct substitution. Shared word prefixes are
/// multiplied once. A nonzero monomial_budget bounds the total entry weight
/// of every intermediate product (resource_limit when exceeded).
template <class T>
UTMatrix<T> evaluate(const NcPolynomial& p, std::span<const UTMatrix<T>> mats, std::size_t monomial_budget = 0) {
  detail::check_tuple(mats, p.arity());
  for (const auto& u : mats) {
    if (!(u.field() == p.field())) raise(ErrorKind::field_mismatch, "matrix field differs from polynomial field");
  }
  const std::size_t n = mats.front().size();
  UTMatrix<T> result(p.field(), n);
  detail::WordTrie trie(p);
  auto visit = [&](auto&& self, std::size_t node, const UTMatrix<T>& prefix) -> void {
    const auto& nd = trie.nodes[node];
    if (nd.coefficient != nullptr) result = result + prefix.scaled(*nd.coefficient);
    for (const auto& [letter, child] : nd.children) {
      UTMatrix<T> next = prefix * mats[letter - 1];
      if (monomial_budget != 0 && next.weight() > monomial_budget) {
        raise(ErrorKind::resource_limit, "intermediate product exceeds the monomial budget of " +
                                             std::to_string(monomial_budget));
      }
      self(self, child, next);
    }
  };
  for (const auto& [letter, child] : trie.nodes[0].children) visit(visit, child, mats[letter - 1]);
  if (monomial_budget != 0 && result.weight() > monomial_budget) {
    raise(ErrorKind::resource_limit, "result exceeds the monomial budget of " + std::to_string(monomial_budget));
  }
  return result;
}

inline constexpr std::size_t kDefaultMonomialBudget = 1000000;

/// The m matrices with entry (j,k) = x[j,k,i] and diagonal (j,j) = z[j,i].
std::vector<PolyMatrix> generic_tuple(const Field& field, std::size_t n, std::size_t m);

/// p at the generic tuple; entries are the polynomials p_{st}.
PolyMatrix generic_evaluate(const NcPolynomial& p, std::size_t n, std::size_t monomial_budget = kDefaultMonomialBudget);

/// Substitutes concrete matrices into a polynomial in x/z variables.
FieldValue substitute_tuple(const CPolynomial& c, std::span<const FieldMatrix> mats);

class CoefficientTable;

/// p(u) through the structured decomposition: diagonal entries p(a_jj),
/// off-diagonal entries summed over strictly increasing paths
/// s = j_1 < ... < j_{k+1} = t of p_{i_1..i_k}(a_{j_1}, ..., a_{j_{k+1}})
/// times the arc product. Coefficient polynomials come from the table.
FieldMatrix evaluate_structured(const NcPolynomial& p, std::span<const FieldMatrix> mats, CoefficientTable& table);
FieldMatrix evaluate_structured(const NcPolynomial& p, std::span<const FieldMatrix> mats);
PolyMatrix evaluate_structured(const NcPolynomial& p, std::span<const PolyMatrix> mats, CoefficientTable& table);

}  // namespace utri

#endif  // UTRI_TRIANGULAR_HPP

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

// Independent reference implementations used only by the tests.
#ifndef UTRI_TESTS_ORACLES_HPP
#define UTRI_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "utri/analysis.hpp"
#include "utri/cpoly.hpp"
#include "utri/field.hpp"
#include "utri/freealg.hpp"
#include "utri/triangular.hpp"

namespace oracle {

using utri::Field;
using utri::FieldValue;

/// Full n x n matrix, 0-based, no triangular assumptions.
using Dense = std::vector<std::vector<FieldValue>>;

inline Dense dense(const utri::FieldMatrix& u) {
  const std::size_t n = u.size();
  Dense d(n, std::vector<FieldValue>(n, u.field().zero()));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) d[j][k] = u.at(j + 1, k + 1);
  }
  return d;
}

inline Dense multiply(const Field& f, const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<FieldValue>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t k = 0; k < n; ++k) c[i][k] += a[i][l] * b[l][k];
    }
  }
  return c;
}

/// Schoolbook evaluation: every word as a chain of dense products.
inline Dense evaluate(const utri::NcPolynomial& p, const std::vector<utri::FieldMatrix>& mats) {
  const Field& f = p.field();
  const std::size_t n = mats.front().size();
  std::vector<Dense> ds;
  for (const auto& u : mats) ds.push_back(dense(u));
  Dense acc(n, std::vector<FieldValue>(n, f.zero()));
  for (const auto& [w, c] : p.terms()) {
    Dense prod = ds[w[0] - 1];
    for (std::size_t l = 1; l < w.size(); ++l) prod = multiply(f, prod, ds[w[l] - 1]);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) acc[j][k] += c * prod[j][k];
    }
  }
  return acc;
}

inline bool equals(const Dense& a, const utri::FieldMatrix& u) {
  const std::size_t n = u.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const FieldValue expected = k < j ? u.field().zero() : u.at(j + 1, k + 1);
      if (!(a[j][k] == expected)) return false;
    }
  }
  return true;
}

inline double deviation(const Dense& a, const utri::FieldMatrix& u) {
  double worst = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      const FieldValue expected = k < j ? u.field().zero() : u.at(j + 1, k + 1);
      worst = std::max(worst, std::abs((a[j][k] - expected).complex()));
    }
  }
  return worst;
}

/// Coefficient polynomial read off the words: for each word w and each way
/// of picking positions q_1 < ... < q_k carrying letters i_1..i_k, the
/// segments between them become commuting monomials in blocks 1..k+1.
inline utri::CPolynomial coefficient_from_words(const utri::NcPolynomial& p, const utri::SlotTuple& tuple) {
  const Field& f = p.field();
  const std::size_t k = tuple.size();
  utri::CPolynomial out(f);
  for (const auto& [w, c] : p.terms()) {
    std::vector<std::size_t> pos(k);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
      if (depth == k) {
        utri::CPolynomial term = utri::CPolynomial::constant(f, c);
        std::size_t block = 1;
        std::size_t next = 0;
        for (std::size_t q = 0; q < w.size(); ++q) {
          if (next < k && q == pos[next]) {
            ++block;
            ++next;
            continue;
          }
          term = term * utri::CPolynomial::variable(f, utri::VarKey::diag(static_cast<std::uint32_t>(block), w[q]));
        }
        out += term;
        return;
      }
      for (std::size_t q = start; q < w.size(); ++q) {
        if (w[q] != tuple[depth]) continue;
        pos[depth] = q;
        self(self, depth + 1, q + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

inline utri::NcPolynomial commutator_product(const Field& f, std::size_t count) {
  const std::size_t m = 2 * count;
  utri::NcPolynomial acc = utri::NcPolynomial::variable(f, m, 1) * utri::NcPolynomial::variable(f, m, 2) -
                           utri::NcPolynomial::variable(f, m, 2) * utri::NcPolynomial::variable(f, m, 1);
  for (std::uint32_t c = 2; c <= count; ++c) {
    const auto a = utri::NcPolynomial::variable(f, m, 2 * c - 1);
    const auto b = utri::NcPolynomial::variable(f, m, 2 * c);
    acc = acc * (a * b - b * a);
  }
  return acc;
}

inline utri::NcPolynomial random_polynomial(const Field& f, std::size_t m, std::size_t max_degree,
                                            std::size_t max_terms, std::mt19937_64& rng,
                                            const std::vector<std::int64_t>& coefficients) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> len(1, max_degree);
  std::uniform_int_distribution<std::uint32_t> letter(1, static_cast<std::uint32_t>(m));
  std::uniform_int_distribution<std::size_t> coeff(0, coefficients.size() - 1);
  while (true) {
    std::vector<std::pair<utri::Word, FieldValue>> terms;
    const std::size_t t = nterms(rng);
    for (std::size_t i = 0; i < t; ++i) {
      utri::Word w(len(rng));
      for (auto& x : w) x = letter(rng);
      terms.emplace_back(std::move(w), f.from_int(coefficients[coeff(rng)]));
    }
    auto p = utri::NcPolynomial::from_terms(f, m, terms);
    if (!p.is_zero()) return p;
  }
}

inline utri::FieldMatrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  utri::FieldMatrix u(f, n);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = j; k <= n; ++k) u.at(j, k) = utri::sample(f, rng);
  }
  return u;
}

inline std::vector<utri::FieldMatrix> random_tuple(const Field& f, std::size_t n, std::size_t m,
                                                   std::mt19937_64& rng) {
  std::vector<utri::FieldMatrix> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(random_matrix(f, n, rng));
  return out;
}

/// Random target in T_n^(band) with integer entries of height <= h.
inline utri::FieldMatrix random_band_target(const Field& f, std::size_t n, int band, std::int64_t h,
                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-h, h);
  utri::FieldMatrix u(f, n);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = j; k <= n; ++k) {
      if (static_cast<int>(k - j) > band) u.at(j, k) = f.from_int(d(rng));
    }
  }
  return u;
}

}  // namespace oracle

#endif  // UTRI_TESTS_ORACLES_HPP

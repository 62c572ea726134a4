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

#include "utri/triangular.hpp"

#include <algorithm>
#include <cmath>

#include "utri/analysis.hpp"

namespace utri {

bool approx_equal(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.size() != b.size()) raise(ErrorKind::size_mismatch, "matrix sizes differ");
  for (std::size_t j = 1; j <= a.size(); ++j) {
    for (std::size_t k = j; k <= a.size(); ++k) {
      if (!a.field().equal(a.at(j, k), b.at(j, k))) return false;
    }
  }
  return true;
}

double max_deviation(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.size() != b.size()) raise(ErrorKind::size_mismatch, "matrix sizes differ");
  double worst = 0.0;
  for (std::size_t j = 1; j <= a.size(); ++j) {
    for (std::size_t k = j; k <= a.size(); ++k) {
      const FieldValue d = a.at(j, k) - b.at(j, k);
      const double dev = d.kind() == FieldKind::complex ? std::abs(d.complex()) : (d.is_exact_zero() ? 0.0 : 1.0);
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

FieldMatrix identity_like(const FieldMatrix& shape) {
  FieldMatrix out(shape.field(), shape.size());
  for (std::size_t j = 1; j <= shape.size(); ++j) out.at(j, j) = shape.field().one();
  return out;
}

std::vector<PolyMatrix> generic_tuple(const Field& field, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) raise(ErrorKind::invalid_argument, "generic tuple needs n >= 1 and m >= 1");
  std::vector<PolyMatrix> out;
  out.reserve(m);
  for (std::uint32_t i = 1; i <= m; ++i) {
    PolyMatrix u(field, n);
    for (std::uint32_t j = 1; j <= n; ++j) {
      u.at(j, j) = CPolynomial::variable(field, VarKey::diag(j, i));
      for (std::uint32_t k = j + 1; k <= n; ++k) u.at(j, k) = CPolynomial::variable(field, VarKey::entry(j, k, i));
    }
    out.push_back(std::move(u));
  }
  return out;
}

PolyMatrix generic_evaluate(const NcPolynomial& p, std::size_t n, std::size_t monomial_budget) {
  const auto tuple = generic_tuple(p.field(), n, p.arity());
  return evaluate<CPolynomial>(p, tuple, monomial_budget);
}

FieldValue substitute_tuple(const CPolynomial& c, std::span<const FieldMatrix> mats) {
  return eval_with(c, [&](const VarKey& key) -> const FieldValue* {
    if (key.kind == VarKey::Kind::out) return nullptr;
    const std::uint32_t i = key.slot();
    if (i == 0 || i > mats.size() || key.col() > mats[i - 1].size()) return nullptr;
    return &mats[i - 1].at(key.row(), key.col());
  });
}

namespace {

CPolynomial substitute_poly(const CPolynomial& c, const std::function<const CPolynomial*(const VarKey&)>& lookup) {
  CPolynomial acc(c.field());
  for (const auto& [mono, coeff] : c.terms()) {
    CPolynomial term = CPolynomial::constant(c.field(), coeff);
    for (const auto& [k, e] : mono) {
      const CPolynomial* v = lookup(k);
      if (v == nullptr) raise(ErrorKind::unbound_variable, "no value bound for " + k.to_string());
      for (std::uint32_t r = 0; r < e; ++r) term = term * *v;
    }
    acc += term;
  }
  return acc;
}

template <class T>
T scalar_value(const NcPolynomial& p, std::span<const UTMatrix<T>> mats, std::size_t j) {
  T acc = RingOps<T>::zero(p.field());
  for (const auto& [w, c] : p.terms()) {
    T term = RingOps<T>::scaled(RingOps<T>::one(p.field()), c);
    for (auto i : w) term = term * mats[i - 1].at(j, j);
    acc = acc + term;
  }
  return acc;
}

template <class T>
T coefficient_value(const CPolynomial& coeff, std::span<const UTMatrix<T>> mats, std::span<const std::size_t> path) {
  auto lookup = [&](const VarKey& key) -> const T* {
    if (key.kind != VarKey::Kind::diag || key.a > path.size() || key.b > mats.size()) return nullptr;
    const std::size_t j = path[key.a - 1];
    return &mats[key.b - 1].at(j, j);
  };
  if constexpr (std::is_same_v<T, FieldValue>) {
    return eval_with(coeff, lookup);
  } else {
    return substitute_poly(coeff, lookup);
  }
}

template <class T>
UTMatrix<T> structured_impl(const NcPolynomial& p, std::span<const UTMatrix<T>> mats, CoefficientTable& table) {
  detail::check_tuple(mats, p.arity());
  if (!(table.polynomial() == p)) raise(ErrorKind::invalid_argument, "coefficient table belongs to another polynomial");
  const std::size_t n = mats.front().size();
  const Field& field = p.field();
  UTMatrix<T> out(field, n);
  for (std::size_t j = 1; j <= n; ++j) out.at(j, j) = scalar_value(p, mats, j);

  const std::size_t d = p.degree();
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t t = s + 1; t <= n; ++t) {
      T sum = RingOps<T>::zero(field);
      for (std::size_t k = 1; k <= std::min(d, t - s); ++k) {
        const auto& level = table.level(k);
        if (level.empty()) continue;
        // strictly increasing paths s = j_1 < ... < j_{k+1} = t
        std::vector<std::size_t> path(k + 1);
        path[0] = s;
        path[k] = t;
        auto walk = [&](auto&& self, std::size_t depth) -> void {
          if (depth == k) {
            for (const auto& [tuple, coeff] : level) {
              T arc = RingOps<T>::one(field);
              bool vanishes = false;
              for (std::size_t l = 0; l < k; ++l) {
                const T& a = mats[tuple[l] - 1].at(path[l], path[l + 1]);
                if (RingOps<T>::is_zero(field, a)) {
                  vanishes = true;
                  break;
                }
                arc = arc * a;
              }
              if (vanishes) continue;
              sum = sum + coefficient_value(coeff, mats, path) * arc;
            }
            return;
          }
          // choose path[depth] leaving room for the remaining k - depth steps
          for (std::size_t next = path[depth - 1] + 1; next + (k - depth) <= t; ++next) {
            path[depth] = next;
            self(self, depth + 1);
          }
        };
        walk(walk, 1);
      }
      out.at(s, t) = sum;
    }
  }
  return out;
}

}  // namespace

FieldMatrix evaluate_structured(const NcPolynomial& p, std::span<const FieldMatrix> mats, CoefficientTable& table) {
  return structured_impl<FieldValue>(p, mats, table);
}

FieldMatrix evaluate_structured(const NcPolynomial& p, std::span<const FieldMatrix> mats) {
  CoefficientTable table(p);
  return structured_impl<FieldValue>(p, mats, table);
}

PolyMatrix evaluate_structured(const NcPolynomial& p, std::span<const PolyMatrix> mats, CoefficientTable& table) {
  return structured_impl<CPolynomial>(p, mats, table);
}

}  // namespace utri

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

#include "utri/analysis.hpp"

#include <algorithm>

namespace utri {

CoefficientTable::CoefficientTable(NcPolynomial p, std::size_t monomial_budget)
    : p_(std::move(p)), budget_(monomial_budget) {}

const std::map<SlotTuple, CPolynomial>& CoefficientTable::level(std::size_t k) {
  if (k == 0) raise(ErrorKind::invalid_argument, "coefficient polynomials start at k = 1");
  auto found = levels_.find(k);
  if (found != levels_.end()) return found->second;

  std::map<SlotTuple, CPolynomial> out;
  if (p_.degree() >= k) {
    // Evaluate on the chain-supported generic tuple of size k + 1: only the
    // diagonal and first superdiagonal are symbolic. Entry (1, k+1) then
    // consists of exactly the chain monomials.
    const Field& field = p_.field();
    const std::size_t n = k + 1;
    std::vector<PolyMatrix> chain;
    for (std::uint32_t i = 1; i <= p_.arity(); ++i) {
      PolyMatrix u(field, n);
      for (std::uint32_t j = 1; j <= n; ++j) {
        u.at(j, j) = CPolynomial::variable(field, VarKey::diag(j, i));
        if (j < n) u.at(j, j + 1) = CPolynomial::variable(field, VarKey::entry(j, j + 1, i));
      }
      chain.push_back(std::move(u));
    }
    const PolyMatrix value = evaluate<CPolynomial>(p_, chain, budget_);
    for (const auto& [mono, coeff] : value.at(1, n).terms()) {
      SlotTuple tuple(k, 0);
      Monomial rest;
      for (const auto& [key, e] : mono) {
        if (key.kind == VarKey::Kind::entry) {
          if (e != 1 || key.b != key.a + 1 || tuple[key.a - 1] != 0) {
            raise(ErrorKind::internal_inconsistency, "chain monomial with repeated arc " + key.to_string());
          }
          tuple[key.a - 1] = key.c;
        } else {
          rest.emplace_back(key, e);
        }
      }
      if (std::find(tuple.begin(), tuple.end(), 0U) != tuple.end()) {
        raise(ErrorKind::internal_inconsistency, "chain monomial missing an arc");
      }
      auto it = out.try_emplace(tuple, CPolynomial(field)).first;
      it->second.add_term(rest, coeff);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return levels_.emplace(k, std::move(out)).first->second;
}

CPolynomial CoefficientTable::coefficient(const SlotTuple& tuple) {
  const auto& lv = level(tuple.size());
  auto it = lv.find(tuple);
  return it == lv.end() ? CPolynomial(p_.field()) : it->second;
}

bool is_identity(const NcPolynomial& p, std::size_t n, std::size_t monomial_budget) {
  if (n == 0) raise(ErrorKind::invalid_argument, "size must be >= 1");
  return generic_evaluate(p, n, monomial_budget).is_zero();
}

OrderReport order(const NcPolynomial& p, std::size_t max_n, std::size_t monomial_budget) {
  if (p.is_zero()) raise(ErrorKind::precondition, "order of the zero polynomial is undefined");
  if (max_n == 0) max_n = p.degree() + 1;
  OrderReport report;
  report.max_n = max_n;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const PolyMatrix value = generic_evaluate(p, n, monomial_budget);
    if (value.is_zero()) continue;
    report.order = n - 1;
    OrderWitness w;
    w.size = n;
    // first nonzero entry, scanning superdiagonals outward
    for (std::size_t span = 0; span < n && w.row == 0; ++span) {
      for (std::size_t j = 1; j + span <= n; ++j) {
        if (!value.at(j, j + span).is_zero()) {
          w.row = j;
          w.col = j + span;
          w.entry = value.at(j, j + span);
          break;
        }
      }
    }
    Rng rng(0x6f726465ULL + n);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Assignment point;
      for (const auto& key : w.entry.variables()) point.emplace(key, sample(p.field(), rng));
      if (!p.field().is_zero(eval_full(w.entry, point))) {
        w.point = std::move(point);
        break;
      }
    }
    report.witness = std::move(w);
    return report;
  }
  return report;
}

CPolynomial coeff_poly(const NcPolynomial& p, const SlotTuple& tuple, std::size_t monomial_budget) {
  const std::size_t k = tuple.size();
  if (k == 0) raise(ErrorKind::invalid_argument, "empty slot tuple");
  for (auto i : tuple) {
    if (i == 0 || i > p.arity()) raise(ErrorKind::variable_out_of_range, "slot " + std::to_string(i));
  }
  const std::size_t n = k + 1;
  const PolyMatrix generic = generic_evaluate(p, n, monomial_budget);
  const CPolynomial& entry = generic.at(1, n);

  std::vector<VarKey> arcs;
  for (std::uint32_t l = 1; l <= k; ++l) arcs.push_back(VarKey::entry(l, l + 1, tuple[l - 1]));
  Assignment zeros;
  for (const auto& key : entry.variables()) {
    if (key.kind == VarKey::Kind::entry && std::find(arcs.begin(), arcs.end(), key) == arcs.end()) {
      zeros.emplace(key, p.field().zero());
    }
  }
  return coefficient_of(eval_partial(entry, zeros), arcs);
}

std::vector<SlotTuple> leading_tuples(CoefficientTable& table, std::size_t r) {
  if (r < 1) raise(ErrorKind::precondition, "leading tuples need ord(p) >= 1");
  std::vector<SlotTuple> out;
  for (const auto& [tuple, poly] : table.level(r)) out.push_back(tuple);
  if (out.empty()) {
    raise(ErrorKind::internal_inconsistency,
          "no nonzero coefficient polynomial of length " + std::to_string(r) + "; order computation is inconsistent");
  }
  return out;
}

std::vector<SlotTuple> leading_tuples(const NcPolynomial& p, std::size_t r) {
  CoefficientTable table(p);
  return leading_tuples(table, r);
}

std::string to_string(ImageCase c) {
  switch (c) {
    case ImageCase::dense_full: return "dense_full";
    case ImageCase::equals_band: return "equals_band";
    case ImageCase::dense_in_band: return "dense_in_band";
    case ImageCase::zero: return "zero";
  }
  return {};
}

Classification classify_order(std::size_t r, std::size_t n) {
  if (n == 0) raise(ErrorKind::invalid_argument, "n must be >= 1");
  Classification c;
  c.order = r;
  c.n = n;
  auto dim = [n](std::size_t rr) { return (n - rr) * (n - rr + 1) / 2; };
  if (r >= n) {
    c.image_case = ImageCase::zero;
    c.band = static_cast<int>(n) - 1;
    c.affine_dim = 0;
  } else if (r == 0) {
    c.image_case = ImageCase::dense_full;
    c.band = -1;
    c.affine_dim = dim(0);
  } else if (r == 1 || r == n - 1) {
    c.image_case = ImageCase::equals_band;
    c.band = static_cast<int>(r) - 1;
    c.affine_dim = dim(r);
  } else {
    c.image_case = ImageCase::dense_in_band;
    c.band = static_cast<int>(r) - 1;
    c.affine_dim = dim(r);
  }
  return c;
}

Classification classify(const NcPolynomial& p, std::size_t n, std::size_t max_n) {
  const OrderReport report = order(p, max_n);
  if (report.order) return classify_order(*report.order, n);
  if (!is_identity(p, n)) {
    raise(ErrorKind::cap_reached, "order unresolved below max_n = " + std::to_string(report.max_n));
  }
  Classification c = classify_order(n, n);
  c.order.reset();
  return c;
}

BandIndexSet band_sets(std::uint32_t s, std::uint32_t t, std::uint32_t r) {
  if (s < 1 || s >= t) raise(ErrorKind::precondition, "band sets need 1 <= s < t");
  if (r < 1) raise(ErrorKind::precondition, "band sets need r >= 1");
  BandIndexSet out{s, t, r, {}, {}};
  for (std::uint32_t j = s; j <= t; ++j) {
    for (std::uint32_t k = j; k <= t; ++k) {
      out.full.emplace(j, k);
      if (j != k && static_cast<long>(t - s) - static_cast<long>(k - j) >= static_cast<long>(r) - 1) {
        out.reduced.emplace(j, k);
      }
    }
  }
  return out;
}

}  // namespace utri

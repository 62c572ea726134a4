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

#include <gtest/gtest.h>

#include "utri/cpoly.hpp"

using namespace utri;

namespace {

const Field kQ = Field::rational();

CPolynomial var(const VarKey& k) { return CPolynomial::variable(kQ, k); }
CPolynomial num(std::int64_t v) { return CPolynomial::constant(kQ, kQ.from_int(v)); }

}  // namespace

TEST(VarKey, Rendering) {
  EXPECT_EQ(VarKey::entry(1, 2, 3).to_string(), "x[1,2,3]");
  EXPECT_EQ(VarKey::diag(2, 1).to_string(), "z[2,1]");
  EXPECT_EQ(VarKey::out(1, 3).to_string(), "y[1,3]");
  EXPECT_THROW(VarKey::entry(2, 1, 1), Error);
  EXPECT_THROW(VarKey::out(2, 2), Error);
}

TEST(CPoly, EvalFullExamples) {
  const CPolynomial c = var(VarKey::entry(1, 2, 1)) * var(VarKey::entry(2, 3, 2));
  const Assignment a{{VarKey::entry(1, 2, 1), kQ.from_int(2)}, {VarKey::entry(2, 3, 2), kQ.from_int(3)}};
  EXPECT_EQ(eval_full(c, a), kQ.from_int(6));
  EXPECT_EQ(eval_full(CPolynomial(kQ), a), kQ.zero());

  const CPolynomial d = var(VarKey::diag(2, 2)) - var(VarKey::diag(1, 2));
  const Assignment z{{VarKey::diag(1, 1), kQ.from_int(1)},
                     {VarKey::diag(1, 2), kQ.from_int(4)},
                     {VarKey::diag(2, 1), kQ.from_int(0)},
                     {VarKey::diag(2, 2), kQ.from_int(9)}};
  EXPECT_EQ(eval_full(d, z), kQ.from_int(5));
}

TEST(CPoly, EvalFullUnbound) {
  try {
    eval_full(var(VarKey::diag(1, 1)), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unbound_variable);
  }
}

TEST(CPoly, EvalPartial) {
  const VarKey x = VarKey::entry(1, 2, 1);
  const VarKey y = VarKey::entry(1, 3, 1);
  const CPolynomial c = num(2) * var(x) + num(3) * var(x) * var(y);
  EXPECT_EQ(eval_partial(c, {}), c);
  EXPECT_EQ(eval_partial(c, {{y, kQ.zero()}}), num(2) * var(x));
  const Assignment all{{x, kQ.from_int(5)}, {y, kQ.from_int(-1)}};
  const CPolynomial bound = eval_partial(c, all);
  EXPECT_TRUE(bound.is_constant());
  EXPECT_EQ(bound.constant_term(), eval_full(c, all));
}

TEST(CPoly, CoefficientOf) {
  const VarKey a1 = VarKey::entry(1, 2, 1);
  const VarKey a2 = VarKey::entry(1, 2, 2);
  const CPolynomial lhs = var(VarKey::diag(2, 2)) - var(VarKey::diag(1, 2));
  const CPolynomial rhs = var(VarKey::diag(1, 1)) - var(VarKey::diag(2, 1));
  const CPolynomial c = lhs * var(a1) + rhs * var(a2);
  const VarKey only1[] = {a1};
  EXPECT_EQ(coefficient_of(c, only1), lhs);
  const VarKey absent[] = {VarKey::entry(2, 3, 1)};
  EXPECT_TRUE(coefficient_of(c, absent).is_zero());
  const VarKey both[] = {a1, a2};
  EXPECT_EQ(coefficient_of(var(a1) * var(a2), both), num(1));
  const CPolynomial sq = var(a1) * var(a1);
  EXPECT_THROW(coefficient_of(sq, only1), Error);
}

TEST(CPoly, SubsetProduct) {
  const CPolynomial x = var(VarKey::diag(1, 1));
  const CPolynomial expected =
      var(VarKey::diag(1, 1)) * var(VarKey::diag(2, 1)) * var(VarKey::diag(3, 1));
  EXPECT_EQ(subset_product(x, 1, 3), expected);

  const CPolynomial diff = var(VarKey::diag(1, 1)) - var(VarKey::diag(2, 1));
  EXPECT_EQ(subset_product(diff, 2, 2), diff);
  auto z = [](std::uint32_t j) { return var(VarKey::diag(j, 1)); };
  EXPECT_EQ(subset_product(diff, 2, 3), (z(1) - z(2)) * (z(1) - z(3)) * (z(2) - z(3)));
  EXPECT_THROW(subset_product(CPolynomial(kQ), 1, 2), Error);
}

TEST(CPoly, ArithmeticLaws) {
  Rng rng(3);
  auto random_poly = [&] {
    CPolynomial acc(kQ);
    std::uniform_int_distribution<std::uint32_t> idx(1, 3);
    for (int t = 0; t < 4; ++t) {
      CPolynomial term = CPolynomial::constant(kQ, sample(kQ, rng));
      for (int f = 0; f < 2; ++f) term = term * var(VarKey::diag(idx(rng), idx(rng)));
      acc += term;
    }
    return acc;
  };
  for (int i = 0; i < 50; ++i) {
    const CPolynomial a = random_poly();
    const CPolynomial b = random_poly();
    const CPolynomial c = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    Assignment pt;
    for (const auto& k : (a * b).variables()) pt.emplace(k, sample(kQ, rng));
    if (!pt.empty()) EXPECT_EQ(eval_full(a * b, pt), eval_full(a, pt) * eval_full(b, pt));
  }
}

TEST(CPoly, ParseAndPrint) {
  const CPolynomial f = parse_cpolynomial("y[1,3]*y[2,4] - 2*y[1,3]^2 + 1", kQ);
  EXPECT_EQ(f.total_degree(), 2U);
  EXPECT_EQ(f.degree_in(VarKey::out(1, 3)), 2U);
  EXPECT_EQ(parse_cpolynomial(f.to_string(), kQ), f);
  const CPolynomial g = parse_cpolynomial("x[1,2,1]*z[2,2] - z[1,1]", kQ);
  EXPECT_EQ(g.variables().size(), 3U);
  EXPECT_THROW(parse_cpolynomial("y[2,1]", kQ), Error);
  EXPECT_THROW(parse_cpolynomial("w[1,2]", kQ), Error);
}

TEST(CPoly, RenameBlocks) {
  const CPolynomial c = var(VarKey::diag(1, 1)) * var(VarKey::diag(2, 3));
  const std::uint32_t map[] = {4, 7};
  EXPECT_EQ(rename_blocks(c, map), var(VarKey::diag(4, 1)) * var(VarKey::diag(7, 3)));
}

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

#include "oracles.hpp"
#include "utri/analysis.hpp"
#include "utri/triangular.hpp"

using namespace utri;

namespace {

const Field kQ = Field::rational();

FieldMatrix mat2(const Field& f, std::int64_t a, std::int64_t b, std::int64_t d) {
  FieldMatrix u(f, 2);
  u.at(1, 1) = f.from_int(a);
  u.at(1, 2) = f.from_int(b);
  u.at(2, 2) = f.from_int(d);
  return u;
}

}  // namespace

TEST(UTMatrix, PackedIndexing) {
  FieldMatrix u(kQ, 4);
  for (std::size_t j = 1; j <= 4; ++j) {
    for (std::size_t k = j; k <= 4; ++k) u.at(j, k) = kQ.from_int(static_cast<std::int64_t>(10 * j + k));
  }
  for (std::size_t j = 1; j <= 4; ++j) {
    for (std::size_t k = j; k <= 4; ++k) EXPECT_EQ(u.at(j, k), kQ.from_int(static_cast<std::int64_t>(10 * j + k)));
  }
  EXPECT_THROW(u.at(2, 1), Error);
  EXPECT_THROW(u.at(1, 5), Error);
}

TEST(UTMatrix, ProductMatchesDense) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto a = oracle::random_matrix(kQ, 4, rng);
    const auto b = oracle::random_matrix(kQ, 4, rng);
    EXPECT_TRUE(oracle::equals(oracle::multiply(kQ, oracle::dense(a), oracle::dense(b)), a * b));
  }
}

TEST(UTMatrix, BandMembership) {
  FieldMatrix u(kQ, 3);
  u.at(1, 3) = kQ.one();
  EXPECT_TRUE(u.in_band(1));
  EXPECT_FALSE(u.in_band(2));
  EXPECT_TRUE(FieldMatrix(kQ, 3).in_band(2));
}

TEST(WordProduct, Examples) {
  const FieldMatrix u = mat2(kQ, 2, 3, 5);
  const std::vector<FieldMatrix> one{u};
  EXPECT_EQ(word_product<FieldValue>(one, Word{1}), u);
  // [[a^2, ab + bd], [0, d^2]]
  EXPECT_EQ(word_product<FieldValue>(one, Word{1, 1}), mat2(kQ, 4, 6 + 15, 25));
  EXPECT_EQ(word_product_paths<FieldValue>(one, Word{1, 1}), mat2(kQ, 4, 21, 25));
}

TEST(WordProduct, StrictlyUpperIsNilpotent) {
  std::mt19937_64 rng(2);
  std::vector<FieldMatrix> mats;
  for (int i = 0; i < 2; ++i) {
    FieldMatrix u = oracle::random_matrix(kQ, 3, rng);
    for (std::size_t j = 1; j <= 3; ++j) u.at(j, j) = kQ.zero();
    mats.push_back(u);
  }
  EXPECT_TRUE(word_product<FieldValue>(mats, Word{1, 2, 1}).is_zero());
  EXPECT_TRUE(word_product_paths<FieldValue>(mats, Word{2, 2, 1}).is_zero());
  EXPECT_FALSE(word_product<FieldValue>(mats, Word{1, 2}).is_zero());
}

TEST(WordProduct, PathSumMatchesChainedProduct) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> letter(1, 3);
  for (int i = 0; i < 100; ++i) {
    const auto mats = oracle::random_tuple(Field::prime(101), 4, 3, rng);
    Word w(1 + i % 5);
    for (auto& x : w) x = letter(rng);
    EXPECT_EQ(word_product<FieldValue>(mats, w), word_product_paths<FieldValue>(mats, w));
  }
}

TEST(Evaluate, Examples) {
  const NcPolynomial comm = parse_polynomial("[x1,x2]", 2, kQ);
  const std::vector<FieldMatrix> mats{mat2(kQ, 1, 0, 0), mat2(kQ, 0, 5, 0)};
  EXPECT_EQ(evaluate<FieldValue>(comm, mats), mat2(kQ, 0, 5, 0));

  const std::vector<FieldMatrix> zeros{FieldMatrix(kQ, 3), FieldMatrix(kQ, 3)};
  EXPECT_TRUE(evaluate<FieldValue>(parse_polynomial("x1*x2 + 3*x2^2 - x1", 2, kQ), zeros).is_zero());

  const std::vector<FieldMatrix> nil{mat2(kQ, 0, 1, 0)};
  EXPECT_TRUE(evaluate<FieldValue>(parse_polynomial("x1^2", 1, kQ), nil).is_zero());
}

TEST(Evaluate, TupleChecks) {
  const NcPolynomial p = parse_polynomial("[x1,x2]", 2, kQ);
  const std::vector<FieldMatrix> short_tuple{mat2(kQ, 1, 2, 3)};
  EXPECT_THROW(evaluate<FieldValue>(p, short_tuple), Error);
  const std::vector<FieldMatrix> ragged{mat2(kQ, 1, 2, 3), FieldMatrix(kQ, 3)};
  EXPECT_THROW(evaluate<FieldValue>(p, ragged), Error);
  const std::vector<FieldMatrix> wrong_field{mat2(Field::prime(5), 1, 2, 3), mat2(Field::prime(5), 1, 2, 3)};
  EXPECT_THROW(evaluate<FieldValue>(p, wrong_field), Error);
}

TEST(Evaluate, MatchesSchoolbookOracle) {
  std::mt19937_64 rng(4);
  for (const Field& f : {kQ, Field::prime(7)}) {
    for (int i = 0; i < 60; ++i) {
      const auto p = oracle::random_polynomial(f, 3, 4, 5, rng, {1, 2, -3, 5});
      const std::size_t n = 1 + i % 4;
      const auto mats = oracle::random_tuple(f, n, 3, rng);
      EXPECT_TRUE(oracle::equals(oracle::evaluate(p, mats), evaluate<FieldValue>(p, mats))) << p.to_string();
    }
  }
}

TEST(Evaluate, MonomialBudget) {
  const NcPolynomial p = parse_polynomial("(x1+x2)^6", 2, kQ);
  EXPECT_THROW(generic_evaluate(p, 4, 100), Error);
}

TEST(EvaluateStructured, AgreesWithDirect) {
  std::mt19937_64 rng(5);
  for (const Field& f : {kQ, Field::prime(3), Field::prime(101)}) {
    for (int i = 0; i < 60; ++i) {
      const auto p = oracle::random_polynomial(f, 2, 4, 4, rng, {1, 2});
      const auto mats = oracle::random_tuple(f, 1 + i % 5, 2, rng);
      EXPECT_EQ(evaluate_structured(p, mats), evaluate<FieldValue>(p, mats)) << p.to_string();
    }
  }
}

TEST(EvaluateStructured, ComplexWithinTolerance) {
  const Field c = Field::complex();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const auto p = oracle::random_polynomial(c, 2, 3, 4, rng, {1, 2, -1});
    const auto mats = oracle::random_tuple(c, 4, 2, rng);
    EXPECT_LE(max_deviation(evaluate_structured(p, mats), evaluate<FieldValue>(p, mats)), 1e-8);
  }
}

TEST(EvaluateStructured, GenericCommutator) {
  const NcPolynomial comm = parse_polynomial("[x1,x2]", 2, kQ);
  const auto generic = generic_tuple(kQ, 2, 2);
  CoefficientTable table(comm);
  const PolyMatrix value = evaluate_structured(comm, generic, table);
  const CPolynomial expected = parse_cpolynomial("(z[2,2]-z[1,2])*x[1,2,1] + (z[1,1]-z[2,1])*x[1,2,2]", kQ);
  EXPECT_TRUE(value.at(1, 1).is_zero());
  EXPECT_TRUE(value.at(2, 2).is_zero());
  EXPECT_EQ(value.at(1, 2), expected);
  EXPECT_EQ(generic_evaluate(comm, 2).at(1, 2), expected);
}

TEST(EvaluateStructured, GenericMatchesDirectSymbolically) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto p = oracle::random_polynomial(kQ, 2, 3, 4, rng, {1, -1, 2});
    const std::size_t n = 2 + i % 3;
    CoefficientTable table(p);
    EXPECT_EQ(evaluate_structured(p, generic_tuple(kQ, n, 2), table), generic_evaluate(p, n));
  }
}

TEST(GenericEvaluate, IdentityPolynomialGivesGenericMatrix) {
  const PolyMatrix g = generic_evaluate(parse_polynomial("x1", 1, kQ), 2);
  EXPECT_EQ(g, generic_tuple(kQ, 2, 1).front());
}

TEST(GenericEvaluate, SpecialisesToConcreteEvaluation) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto p = oracle::random_polynomial(kQ, 2, 3, 4, rng, {1, 3});
    const auto mats = oracle::random_tuple(kQ, 3, 2, rng);
    const PolyMatrix g = generic_evaluate(p, 3);
    const FieldMatrix direct = evaluate<FieldValue>(p, mats);
    for (std::size_t j = 1; j <= 3; ++j) {
      for (std::size_t k = j; k <= 3; ++k) EXPECT_EQ(substitute_tuple(g.at(j, k), mats), direct.at(j, k));
    }
  }
}

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

#include <cmath>
#include <numeric>
#include <set>

#include "utri/field.hpp"

using namespace utri;

namespace {

void expect_axioms(const Field& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldValue a = sample(f, rng);
    const FieldValue b = sample(f, rng);
    const FieldValue c = sample(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, f.zero());
    if (!f.is_zero(a)) EXPECT_EQ(a * (f.one() / a), f.one());
  }
}

}  // namespace

TEST(Field, RationalAxioms) { expect_axioms(Field::rational(), 1); }
TEST(Field, PrimeAxioms) {
  expect_axioms(Field::prime(101), 2);
  expect_axioms(Field::prime(2), 3);
  expect_axioms(Field::prime(1000000007), 4);
}

TEST(Field, RationalsStayReduced) {
  const Field q = Field::rational();
  const FieldValue v = q.from_ratio(6, -4);
  EXPECT_EQ(v.rational().get_num(), -3);
  EXPECT_EQ(v.rational().get_den(), 2);
  EXPECT_EQ(v.to_string(), "-3/2");
}

TEST(Field, ResiduesInRange) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.from_int(-1).residue().value, 6U);
  EXPECT_EQ((f.from_int(3) * f.from_int(5)).residue().value, 1U);
  EXPECT_EQ((f.one() / f.from_int(3)).residue().value, 5U);
}

TEST(Field, DivisionByZeroRaises) {
  EXPECT_THROW(Field::rational().one() / Field::rational().zero(), Error);
  EXPECT_THROW(Field::prime(5).one() / Field::prime(5).zero(), Error);
}

TEST(Field, ComplexInverseWithinTolerance) {
  const Field c = Field::complex();
  Rng rng(5);
  std::uniform_real_distribution<double> logmag(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int i = 0; i < 1000; ++i) {
    const FieldValue a = c.from_complex(std::polar(std::pow(10.0, logmag(rng)), angle(rng)));
    const FieldValue prod = a * (c.one() / a);
    EXPECT_LE(std::abs(prod.complex() - 1.0), 1e-12);
  }
}

TEST(Field, ComplexZeroUsesTolerance) {
  const Field c = Field::complex(1e-6);
  EXPECT_TRUE(c.is_zero(c.from_complex({1e-7, -1e-7})));
  EXPECT_FALSE(c.is_zero(c.from_complex({1e-5, 0.0})));
  EXPECT_FALSE(c.one().is_exact_zero());
}

TEST(Field, ParseDescriptors) {
  EXPECT_EQ(Field::parse("Q").kind(), FieldKind::rational);
  EXPECT_EQ(Field::parse("Fp:13").modulus(), 13U);
  EXPECT_EQ(Field::parse("C").kind(), FieldKind::complex);
  EXPECT_DOUBLE_EQ(Field::parse("C:1e-6").zero_tolerance(), 1e-6);
  EXPECT_THROW(Field::parse("Fp:12"), Error);
  EXPECT_THROW(Field::parse("Fp:1"), Error);
  EXPECT_THROW(Field::parse("R"), Error);
}

TEST(Field, ParseValues) {
  EXPECT_EQ(Field::rational().parse_value("-7/14"), Field::rational().from_ratio(-1, 2));
  EXPECT_EQ(Field::prime(5).parse_value("7"), Field::prime(5).from_int(2));
  EXPECT_EQ(Field::prime(5).parse_value("1/2"), Field::prime(5).from_int(3));
  const FieldValue z = Field::complex().parse_value("1.5-2i");
  EXPECT_EQ(z.complex(), std::complex<double>(1.5, -2.0));
  EXPECT_EQ(Field::complex().parse_value("-i").complex(), std::complex<double>(0.0, -1.0));
}

TEST(Field, ComplexTextRoundTrips) {
  const Field c = Field::complex();
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const FieldValue v = sample(c, rng);
    EXPECT_EQ(c.parse_value(v.to_string()), v) << v.to_string();
  }
}

TEST(Field, MismatchedKindsRaise) {
  EXPECT_THROW(Field::rational().one() + Field::prime(5).one(), Error);
  EXPECT_THROW(Field::prime(3).one() + Field::prime(5).one(), Error);
}

TEST(Sample, DeterministicUnderSeed) {
  Rng a(0);
  Rng b(0);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sample(Field::rational(), a), sample(Field::rational(), b));
}

TEST(Sample, PrimeRange) {
  Rng rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 500; ++i) {
    const auto v = sample(Field::prime(5), rng).residue().value;
    EXPECT_LT(v, 5U);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5U);
}

TEST(Sample, ComplexBound) {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) EXPECT_LE(std::abs(sample(Field::complex(), rng).complex()), 1e3);
}

TEST(Sample, RationalSupportAtLeast2To16) {
  // distinct reduced fractions a/b with |a| <= H, 1 <= b <= H
  const std::int64_t h = Field::rational().sampling_height();
  std::size_t support = 1;  // zero
  for (std::int64_t a = 1; a <= h; ++a) {
    for (std::int64_t b = 1; b <= h; ++b) {
      if (std::gcd(a, b) == 1) support += 2;
    }
  }
  EXPECT_GE(support, 65536U);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const mpq_class q = sample(Field::rational(), rng).rational();
    EXPECT_LE(abs(q.get_num()), h);
    EXPECT_LE(q.get_den(), h);
  }
}

TEST(SolveUnivariate, PerfectSquare) {
  const Field q = Field::rational();
  const std::vector<FieldValue> h{q.zero(), q.zero(), q.one()};
  const FieldValue x = solve_univariate(q, h, q.from_int(4));
  EXPECT_TRUE(x == q.from_int(2) || x == q.from_int(-2));
}

TEST(SolveUnivariate, FactoredOverF7) {
  const Field f = Field::prime(7);
  const std::vector<FieldValue> h{f.zero(), f.from_int(-1), f.one()};
  const auto roots = univariate_roots(f, h, f.zero());
  std::set<std::uint64_t> got;
  for (const auto& r : roots) got.insert(r.residue().value);
  EXPECT_EQ(got, (std::set<std::uint64_t>{0, 1}));
}

TEST(SolveUnivariate, CubicOverC) {
  const Field c = Field::complex();
  const std::vector<FieldValue> h{c.one(), c.zero(), c.zero(), c.one()};
  const auto roots = univariate_roots(c, h, c.zero());
  EXPECT_EQ(roots.size(), 3U);
  for (const auto& x : roots) EXPECT_LE(std::abs(horner(h, x).complex()), 1e-9);
}

TEST(SolveUnivariate, NoRationalRoot) {
  const Field q = Field::rational();
  const std::vector<FieldValue> h{q.zero(), q.zero(), q.one()};
  try {
    solve_univariate(q, h, q.from_int(2));
    FAIL() << "expected NoRootInField";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_root_in_field);
  }
}

TEST(SolveUnivariate, ConstantIsPrecondition) {
  const Field q = Field::rational();
  const std::vector<FieldValue> h{q.one()};
  EXPECT_THROW(solve_univariate(q, h, q.one()), Error);
}

TEST(SolveUnivariate, PrimeRootsMatchExhaustiveScan) {
  const Field f = Field::prime(11);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FieldValue> h;
    for (int i = 0; i < 4; ++i) h.push_back(sample(f, rng));
    h.push_back(f.one());
    const FieldValue target = sample(f, rng);
    std::set<std::uint64_t> expected;
    for (std::int64_t x = 0; x < 11; ++x) {
      FieldValue acc = f.zero();
      FieldValue power = f.one();
      for (const auto& c : h) {
        acc += c * power;
        power *= f.from_int(x);
      }
      if (acc == target) expected.insert(static_cast<std::uint64_t>(x));
    }
    std::set<std::uint64_t> got;
    for (const auto& r : univariate_roots(f, h, target)) got.insert(r.residue().value);
    EXPECT_EQ(got, expected);
  }
}

TEST(SolveUnivariate, RationalRootsOfConstructedProducts) {
  const Field q = Field::rational();
  Rng rng(6);
  std::uniform_int_distribution<int> d(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    // h = lead * prod (x - r_i) + target
    std::vector<FieldValue> rs;
    std::vector<FieldValue> h{q.from_int(d(rng) == 0 ? 3 : 2)};
    for (int i = 0; i < 3; ++i) {
      const FieldValue r = q.from_ratio(d(rng), den(rng));
      rs.push_back(r);
      std::vector<FieldValue> next(h.size() + 1, q.zero());
      for (std::size_t k = 0; k < h.size(); ++k) {
        next[k + 1] += h[k];
        next[k] -= r * h[k];
      }
      h = next;
    }
    const FieldValue target = q.from_int(d(rng));
    h[0] += target;
    const auto roots = univariate_roots(q, h, target);
    for (const auto& r : rs) EXPECT_NE(std::find(roots.begin(), roots.end(), r), roots.end());
    for (const auto& r : roots) EXPECT_EQ(horner(h, r), target);
  }
}

TEST(SolveUnivariate, ComplexRandomPolynomials) {
  const Field c = Field::complex();
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FieldValue> h;
    for (int i = 0; i < 6; ++i) h.push_back(sample(c, rng));
    const FieldValue target = sample(c, rng);
    const FieldValue x = solve_univariate(c, h, target);
    EXPECT_LE(std::abs((horner(h, x) - target).complex()), 1e-9);
  }
}

// Copyright 2026 The binmat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "binmat/exact.hpp"

namespace binmat {
namespace {

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), InvalidArgument);
}

TEST(Factorial, Recursion) {
  for (int n = 1; n <= 200; ++n) EXPECT_EQ(factorial(n), n * factorial(n - 1));
}

TEST(FallingProduct, Examples) {
  EXPECT_EQ(falling_product(4, 2, 2), 1);
  EXPECT_EQ(falling_product(4, 2, 3), 1);
  EXPECT_EQ(falling_product(9, 2, 4), 30);
  EXPECT_THROW(falling_product(9, 4, 2), InvalidArgument);
}

TEST(FallingProduct, Step) {
  for (long long a = -5; a <= 30; ++a) {
    for (long long k = 0; k <= 6; ++k) {
      for (long long n = k + 1; n <= 40; ++n) {
        EXPECT_EQ(falling_product(a, k, n), falling_product(a, k, n - 1) * (a - n));
      }
    }
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(3, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Binomial, Pascal) {
  for (int n = 1; n <= 60; ++n) {
    for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(BigRat, NormalizesSignAndTerms) {
  const BigRat x(BigInt(6), BigInt(-4));
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(x.str(), "-3/2");
  EXPECT_EQ(BigRat(5).str(), "5/1");
  EXPECT_EQ(BigRat(BigInt(0), BigInt(-7)).str(), "0/1");
}

TEST(BigRat, DivisionByZero) {
  EXPECT_THROW(BigRat(BigInt(1), BigInt(0)), DivisionByZero);
  EXPECT_THROW(BigRat(3) / BigRat(0), DivisionByZero);
  EXPECT_THROW(BigRat(0).reciprocal(), DivisionByZero);
  EXPECT_THROW(BigRat::parse("1/0"), DivisionByZero);
}

TEST(BigRat, ParseRoundTrip) {
  for (const char* s : {"-1/21", "1/315", "0/1", "7/1", "-465920/1"}) {
    EXPECT_EQ(BigRat::parse(s).str(), s);
  }
  EXPECT_EQ(BigRat::parse("12"), BigRat(12));
  EXPECT_EQ(BigRat::parse("4/-6"), BigRat(BigInt(-2), BigInt(3)));
  EXPECT_THROW(BigRat::parse("1/x"), ParseError);
  EXPECT_THROW(BigRat::parse(""), ParseError);
  EXPECT_EQ(parse_bigint("-123456789012345678901234567890").str(), "-123456789012345678901234567890");
}

class FieldAxioms : public ::testing::Test {
 protected:
  BigRat random_rat() {
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 100000);
    return BigRat(BigInt(num(rng_)), BigInt(den(rng_)));
  }
  std::mt19937_64 rng_{20260501};
};

TEST_F(FieldAxioms, RandomTriples) {
  for (int t = 0; t < 2000; ++t) {
    const BigRat a = random_rat(), b = random_rat(), c = random_rat();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + BigRat(0), a);
    EXPECT_EQ(a * BigRat(1), a);
    EXPECT_EQ(a + (-a), BigRat(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.reciprocal(), BigRat(1));
    }
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST_F(FieldAxioms, ReductionIsIdempotent) {
  for (int t = 0; t < 1000; ++t) {
    const BigRat a = random_rat();
    const BigRat again(a.numerator(), a.denominator());
    EXPECT_EQ(again.numerator(), a.numerator());
    EXPECT_EQ(again.denominator(), a.denominator());
    EXPECT_GT(a.denominator(), 0);
    EXPECT_EQ(gcd(a.numerator(), a.denominator()), a.is_zero() ? a.denominator() : BigInt(1));
  }
}

TEST(BigRat, Ordering) {
  EXPECT_LT(BigRat::parse("-1/21"), BigRat::parse("-1/22"));
  EXPECT_GT(BigRat::parse("1/3"), BigRat(0));
  EXPECT_EQ(BigRat::parse("2/6") <=> BigRat::parse("1/3"), std::strong_ordering::equal);
}

}  // namespace
}  // namespace binmat

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

#include "binmat/gf.hpp"

namespace binmat {
namespace {

GFMatrix random_matrix(std::mt19937_64& rng, int p, int rows, int cols) {
  std::uniform_int_distribution<int> d(0, p - 1);
  GFMatrix m(PrimeField(p), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, static_cast<Residue>(d(rng)));
  return m;
}

GFMatrix random_invertible(std::mt19937_64& rng, int p, int r) {
  while (true) {
    GFMatrix g = random_matrix(rng, p, r, r);
    if (det(g) != 0) return g;
  }
}

// Every matrix over F_p of the given shape, entries as base-p digits of an
// odometer.
template <typename Fn>
void for_each_matrix(int p, int rows, int cols, Fn fn) {
  const int cells = rows * cols;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    GFMatrix m(PrimeField(p), rows, cols);
    long long c = code;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j, c /= p) m.set(i, j, static_cast<Residue>(c % p));
    fn(m);
  }
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2);
  EXPECT_EQ(f.sub(2, 5), 4);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.neg(3), 4);
  for (Residue a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
  EXPECT_EQ(f.reduce(-1), 6);
  EXPECT_THROW(PrimeField(4), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(f.inv(0), DivisionByZero);
}

TEST(Rref, Examples) {
  const auto i3 = GFMatrix::identity(PrimeField(2), 3);
  const RrefResult a = rref(i3);
  EXPECT_EQ(a.matrix, i3);
  EXPECT_EQ(a.rank, 3);
  EXPECT_EQ(a.pivots, (std::vector<int>{1, 2, 3}));

  const RrefResult b = rref(GFMatrix::from_rows(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(b.matrix, GFMatrix::identity(PrimeField(2), 2));
  EXPECT_EQ(b.rank, 2);
  EXPECT_EQ(b.pivots, (std::vector<int>{1, 2}));

  const auto c0 = GFMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}});
  const RrefResult c = rref(c0);
  EXPECT_EQ(c.matrix, c0);
  EXPECT_EQ(c.rank, 2);
  EXPECT_EQ(c.pivots, (std::vector<int>{1, 2}));
}

TEST(Rref, ReducesEntriesModP) {
  EXPECT_EQ(GFMatrix::from_rows(3, {{4, -1}}).to_rows(), (std::vector<std::vector<long long>>{{1, 2}}));
}

TEST(Det, Examples) {
  EXPECT_EQ(det(GFMatrix::identity(PrimeField(3), 2)), 1);
  EXPECT_EQ(det(GFMatrix::from_rows(2, {{1, 1}, {1, 1}})), 0);
  EXPECT_EQ(det(GFMatrix::from_rows(3, {{1, 2}, {2, 1}})), 0);
  EXPECT_EQ(det(GFMatrix::from_rows(5, {{1, 2}, {3, 4}})), 3);
  EXPECT_THROW(det(GFMatrix::from_rows(2, {{1, 0, 1}})), InvalidArgument);
}

TEST(Det, Multiplicative) {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 5, 7}) {
    const PrimeField f(p);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_matrix(rng, p, 4, 4);
      const auto b = random_matrix(rng, p, 4, 4);
      EXPECT_EQ(det(a * b), f.mul(det(a), det(b)));
    }
  }
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(1);
  for (int p : {2, 3, 5}) {
    for (int t = 0; t < 300; ++t) {
      const auto a = random_matrix(rng, p, 1 + t % 4, 1 + t % 9);
      const RrefResult once = rref(a);
      const RrefResult twice = rref(once.matrix);
      EXPECT_EQ(once.matrix, twice.matrix);
      EXPECT_EQ(once.pivots, twice.pivots);
      EXPECT_EQ(once.rank, twice.rank);
    }
  }
}

// Row space is a GL_r invariant, and the RREF is its unique representative.
TEST(Rref, UniqueUnderRandomGlAction) {
  std::mt19937_64 rng(2026);
  int trials = 0;
  for (int p : {2, 3, 5}) {
    for (int t = 0; t < 1000; ++t) {
      const int r = 1 + t % 4;
      const int n = r + t % 6;
      const auto a = random_matrix(rng, p, r, n);
      const auto g = random_invertible(rng, p, r);
      const RrefResult lhs = rref(a);
      const RrefResult rhs = rref(g * a);
      ASSERT_EQ(lhs.matrix, rhs.matrix) << a;
      ASSERT_EQ(lhs.pivots, rhs.pivots);
      ++trials;
    }
  }
  EXPECT_EQ(trials, 3000);
}

TEST(Rref, PackedMatchesGeneric) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const auto a = random_matrix(rng, 2, 1 + t % 6, 1 + t % 32);
    const RrefResult packed = detail::rref_gf2(a);
    const RrefResult generic = detail::rref_generic(a);
    ASSERT_EQ(packed.matrix, generic.matrix);
    ASSERT_EQ(packed.pivots, generic.pivots);
    ASSERT_EQ(packed.rank, generic.rank);
  }
}

TEST(Gf2, PackRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_matrix(rng, 2, 1 + t % 5, 1 + t % 20);
    EXPECT_EQ(Gf2Matrix::pack(a).unpack(), a);
  }
}

TEST(Plucker, Examples) {
  const PluckerVector i2 = plucker(GFMatrix::identity(PrimeField(2), 2));
  EXPECT_EQ(i2.coords().size(), 1u);
  EXPECT_EQ(i2.at(mask_of({1, 2})), 1);

  const PluckerVector u23 = plucker(GFMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(u23.at(mask_of({1, 2})), 1);
  EXPECT_EQ(u23.at(mask_of({1, 3})), 1);
  EXPECT_EQ(u23.at(mask_of({2, 3})), 1);
  EXPECT_TRUE(distinct_columns_via_plucker(u23));

  const PluckerVector rep = plucker(GFMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(rep.at(mask_of({1, 2})), 1);
  EXPECT_EQ(rep.at(mask_of({1, 3})), 0);
  EXPECT_EQ(rep.at(mask_of({2, 3})), 1);
  EXPECT_FALSE(distinct_columns_via_plucker(rep));

  const PluckerVector zero_col = plucker(GFMatrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_FALSE(distinct_columns_via_plucker(zero_col));

  EXPECT_THROW(plucker(GFMatrix::from_rows(2, {{1, 1}, {1, 1}})), InvalidArgument);
}

TEST(ColumnsDistinctNonzero, Examples) {
  EXPECT_TRUE(columns_distinct_nonzero(GFMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}})));
  EXPECT_FALSE(columns_distinct_nonzero(GFMatrix::from_rows(2, {{1, 1, 0}, {0, 0, 1}})));
  EXPECT_FALSE(columns_distinct_nonzero(GFMatrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}})));
  EXPECT_TRUE(columns_distinct_nonzero(GFMatrix::from_rows(3, {{1, 2}, {0, 0}})));
}

// The Plücker predicate only sees the row space, so it must agree with the
// literal column check on the RREF representative of every subspace.
TEST(Plucker, MatchesDirectPredicateExhaustively) {
  int checked = 0;
  for (int p : {2, 3}) {
    for (int r = 1; r <= 2; ++r) {
      for (int n = r; n <= 4; ++n) {
        for_each_matrix(p, r, n, [&](const GFMatrix& a) {
          if (rank(a) != r) return;
          const bool via = distinct_columns_via_plucker(plucker(a));
          ASSERT_EQ(via, columns_distinct_nonzero(rref(a).matrix)) << a;
          ++checked;
        });
      }
    }
  }
  EXPECT_GT(checked, 6000);
}

TEST(Plucker, ScalarInvariance) {
  std::mt19937_64 rng(5);
  for (int p : {3, 5, 7}) {
    const PrimeField f(p);
    for (int t = 0; t < 200; ++t) {
      const int r = 1 + t % 3;
      const auto a = random_matrix(rng, p, r, r + 1 + t % 3);
      if (rank(a) != r) continue;
      const auto g = random_invertible(rng, p, r);
      const PluckerVector pa = plucker(a);
      const PluckerVector pg = plucker(g * a);
      const Residue scale = det(g);
      for (const auto& [s, v] : pa.coords()) EXPECT_EQ(pg.at(s), f.mul(scale, v));
      EXPECT_EQ(distinct_columns_via_plucker(pa), distinct_columns_via_plucker(pg));
    }
  }
}

TEST(Gf2Rank, Vectors) {
  const std::vector<std::uint64_t> v = {1, 2, 3, 4};
  EXPECT_EQ(gf2_rank(v), 3);
  const std::vector<std::uint64_t> zero = {0, 0};
  EXPECT_EQ(gf2_rank(zero), 0);
}

}  // namespace
}  // namespace binmat

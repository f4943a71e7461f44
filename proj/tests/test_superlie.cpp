#include <gtest/gtest.h>

#include "superlie/errors.hpp"
#include "superlie/superlie.hpp"

using namespace superlie;

namespace {

SymFunc classical_brandt(int n) {
  SymFunc f(Basis::p);
  for (long d : divisors(n)) f.add_term(rectangle(static_cast<int>(d), static_cast<int>(n / d)), QTPoly(Rat(mobius(d)) / n));
  return f;
}

}  // namespace

TEST(Brandt, SmallCases) {
  EXPECT_TRUE(same_function(super_brandt_char(2, 0), SymFunc::e(Partition{2})));
  EXPECT_TRUE(same_function(super_brandt_char(0, 2), SymFunc::h(Partition{2})));
  EXPECT_EQ(super_brandt_char(1, 1), SymFunc::p(Partition{1, 1}));
  EXPECT_THROW(super_brandt_char(0, 0), DomainError);
  EXPECT_THROW(super_brandt_char(-1, 2), DomainError);
}

TEST(Brandt, ClassicalReduction) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(super_brandt_char(n, 0), classical_brandt(n)) << n;
}

TEST(Brandt, BiCharacterAndDiagonal) {
  EXPECT_EQ(super_bi_brandt_char(1, 1), BiSymFunc::p(Partition{1}, Partition{1}));
  EXPECT_EQ(super_bi_brandt_char(1, 0), BiSymFunc::p(Partition{1}, Partition{}));
  EXPECT_EQ(super_bi_brandt_char(0, 1), BiSymFunc::p(Partition{}, Partition{1}));
  EXPECT_THROW(super_bi_brandt_char(0, 0), DomainError);
  for (int total = 1; total <= 8; ++total)
    for (int m = 0; m <= total; ++m) {
      EXPECT_EQ(diagonal(super_bi_brandt_char(total - m, m)), super_brandt_char(total - m, m));
      EXPECT_TRUE(schur_expand(super_brandt_char(total - m, m)).nonnegative_integral);
    }
}

TEST(Witt, DimensionsAndSpecialization) {
  for (long n_dim = 0; n_dim <= 5; ++n_dim) {
    EXPECT_EQ(super_witt_dim(2, 0, n_dim), (n_dim * n_dim - n_dim) / 2);
    EXPECT_EQ(super_witt_dim(1, 1, n_dim), n_dim * n_dim);
    EXPECT_EQ(super_witt_dim(1, 0, n_dim), n_dim);
  }
  for (int total = 1; total <= 6; ++total)
    for (int m = 0; m <= total; ++m)
      for (int n_dim = 1; n_dim <= 3; ++n_dim) {
        MultiPoly poly = bi_expand_truncated(super_bi_brandt_char(total - m, m), n_dim, n_dim);
        std::vector<Rat> ones(2 * n_dim, Rat(1));
        EXPECT_EQ(Rat(super_witt_dim(total - m, m, n_dim)), poly.evaluate(ones));
      }
}

TEST(Witt, BruteForceBracketRank) {
  EXPECT_EQ(brute_force_lie_dim(1, 1, 2, 2), 4);
  EXPECT_EQ(brute_force_lie_dim(2, 0, 2, 3), 1);
  EXPECT_EQ(brute_force_lie_dim(0, 2, 1, 2), 3);
  for (int total = 1; total <= 4; ++total)
    for (int m = 0; m <= total; ++m)
      for (int n_dim = 1; n_dim <= 2; ++n_dim)
        EXPECT_EQ(BigInt(brute_force_lie_dim(total - m, m, n_dim, n_dim)), super_witt_dim(total - m, m, n_dim))
            << total - m << "," << m << " N=" << n_dim;
  // Unequal dimensions: the free Lie superalgebra on 1 even and 2 odd generators in
  // bidegree (1,1) is spanned by [x, y_1], [x, y_2].
  EXPECT_EQ(brute_force_lie_dim(1, 1, 1, 2), 2);
  EXPECT_THROW(brute_force_lie_dim(4, 3, 2, 2), ResourceError);
  EXPECT_THROW(brute_force_lie_dim(1, 1, 4, 1), ResourceError);
}

TEST(Petrogradsky, SeriesMatchesBiCharacter) {
  auto series = petrogradsky_series(4, 4);
  EXPECT_EQ(series.at({1, 0}), BiSymFunc::p(Partition{1}, Partition{}));
  EXPECT_EQ(series.at({1, 1}), BiSymFunc::p(Partition{1}, Partition{1}));
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      if (n + m > 0) EXPECT_EQ(series.at({n, m}), super_bi_brandt_char(n, m)) << n << "," << m;
}

TEST(SupportMatrix, ValidationAndJson) {
  SupportMatrix a({{{1, 1}, 2}, {{2, 0}, 0}});
  EXPECT_EQ(a.entries().size(), 1u);
  EXPECT_EQ(a.at(1, 1), 2);
  EXPECT_EQ(a.bidegree(), std::make_pair(2, 2));
  EXPECT_EQ(a.to_json_string(), "[[1,1,2]]");
  EXPECT_EQ(SupportMatrix::parse_json("[ [1,1,2] ]"), a);
  EXPECT_THROW(SupportMatrix({{{0, 0}, 1}}), DomainError);
  EXPECT_THROW(SupportMatrix({{{1, 0}, -1}}), DomainError);
  EXPECT_THROW(SupportMatrix::parse_json("[[1,1]]"), ParseError);
  EXPECT_THROW(SupportMatrix::parse_json("not json"), ParseError);
}

TEST(HigherLie, GammaAndModules) {
  BiSymFunc x = BiSymFunc::p(Partition{1}, Partition{});
  BiSymFunc y = BiSymFunc::p(Partition{}, Partition{1});
  EXPECT_EQ(gamma_char(0, 2, x), BiSymFunc::from_x(to_p(SymFunc::h(Partition{2}))));
  EXPECT_EQ(gamma_char(1, 2, y), BiSymFunc::from_y(to_p(SymFunc::e(Partition{2}))));
  EXPECT_EQ(gamma_char(1, 1, x + y), x + y);
  EXPECT_EQ(super_lie_module_char(SupportMatrix({{{2, 0}, 1}})), BiSymFunc::from_x(to_p(SymFunc::e(Partition{2}))));
  EXPECT_EQ(super_lie_module_char(SupportMatrix({{{1, 0}, 1}, {{0, 1}, 1}})), bi_multiply(x, y));
  for (int d = 1; d <= 4; ++d)
    EXPECT_TRUE(same_function(diagonal(super_lie_module_char(SupportMatrix({{{1, 1}, d}}))),
                              e_pleth(d, SymFunc::p(Partition{1, 1}))));
}

TEST(HigherLie, EnumerationAndThrall) {
  EXPECT_EQ(enumerate_bidegree_matrices(1, 0).size(), 1u);
  EXPECT_EQ(enumerate_bidegree_matrices(1, 1).size(), 2u);
  EXPECT_EQ(enumerate_bidegree_matrices(2, 0).size(), 2u);
  // Matrices of bidegree (n, 0) correspond to partitions of n.
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_bidegree_matrices(n, 0).size(), partitions_of(n).size());
  for (const auto& a : enumerate_bidegree_matrices(3, 2)) EXPECT_EQ(a.bidegree(), std::make_pair(3, 2));
  for (int total = 1; total <= 5; ++total)
    for (int m = 0; m <= total; ++m) EXPECT_TRUE(thrall_sum_check(total - m, m).passed);
  CheckReport r = thrall_sum_check(1, 1);
  EXPECT_EQ(r.check, "thrall");
  EXPECT_TRUE(r.first_discrepancy.empty());
}

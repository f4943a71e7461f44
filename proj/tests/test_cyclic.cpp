#include <gtest/gtest.h>

#include <numeric>

#include "superlie/cyclic.hpp"
#include "superlie/errors.hpp"
#include "superlie/superlie.hpp"

using namespace superlie;

TEST(CyclicCharacters, Powers) {
  auto sign = chi_power(2, 1);
  EXPECT_EQ(sign.at(1), CycloElem(2, Rat(-1)));
  EXPECT_EQ(sign.at(2), CycloElem(2, Rat(1)));
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(chi_power(5, 0).at(k), CycloElem(5, Rat(1)));
  EXPECT_EQ(chi_power(4, 1).at(2), CycloElem(4, Rat(-1)));
  EXPECT_EQ(chi_power(4, 1).at(0), chi_power(4, 1).at(4));
  EXPECT_THROW(chi_power(0, 1), DomainError);
}

TEST(CyclicCharacters, ChiCycAgainstOrbitCounting) {
  EXPECT_EQ(chi_cyc(2, 2).at(2), CycloElem(4, Rat(2)));
  EXPECT_EQ(chi_cyc(3, 1).at(1), CycloElem(4, Rat(0)));
  EXPECT_EQ(chi_cyc_oracle(2, 2).at(1), CycloElem(4, Rat(0)));
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(chi_cyc_oracle(4, 0).at(k), CycloElem(4, Rat(1)));
  for (int total = 1; total <= 10; ++total)
    for (int m = 0; m <= total; ++m) {
      EXPECT_EQ(chi_cyc(total - m, m), chi_cyc_oracle(total - m, m)) << total - m << "," << m;
      EXPECT_EQ(chi_cyc(total - m, m).at(total), CycloElem(total, Rat(binom(total, m))));
    }
  EXPECT_THROW(chi_cyc(0, 0), DomainError);
  EXPECT_THROW(chi_cyc_oracle(10, 7), ResourceError);
}

TEST(CyclicCharacters, PointwiseProduct) {
  auto chi = chi_cyc(2, 2);
  EXPECT_EQ(pointwise_product(chi_power(4, 0), chi), chi);
  EXPECT_EQ(pointwise_product(chi_power(4, 1), chi_power(4, 1)), chi_power(4, 2));
  EXPECT_EQ(pointwise_product(chi, chi_power(4, 2)).at(2), CycloElem(4, Rat(2)));
  EXPECT_THROW(pointwise_product(chi_power(3, 1), chi_power(4, 1)), DomainError);
}

TEST(Induction, FormulaAgainstOracle) {
  EXPECT_TRUE(same_function(induce_frobenius(chi_power(2, 1)), SymFunc::e(Partition{2})));
  EXPECT_TRUE(same_function(induce_frobenius(chi_power(2, 0)), SymFunc::h(Partition{2})));
  EXPECT_EQ(induce_oracle(chi_power(1, 0)).values.at(Partition{1}), 1);
  for (int r = 1; r <= 6; ++r)
    for (int k0 = 0; k0 < r; ++k0) {
      auto chi = chi_power(r, k0);
      EXPECT_EQ(to_p(frobenius_characteristic(induce_oracle(chi))), induce_frobenius(chi)) << r << " " << k0;
    }
  for (int r = 1; r <= 6; ++r)
    for (int m = 0; m <= r; ++m) {
      auto chi = pointwise_product(chi_cyc(r - m, m), chi_power(r, m % 2 ? 1 : m / 2 + 1));
      EXPECT_EQ(to_p(frobenius_characteristic(induce_oracle(chi))), induce_frobenius(chi));
    }
  EXPECT_THROW(induce_oracle(chi_power(8, 1)), ResourceError);
}

TEST(Induction, DependsOnlyOnGcd) {
  for (int r = 1; r <= 8; ++r)
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (std::gcd(a, r) == std::gcd(b, r))
          EXPECT_EQ(induce_frobenius(chi_power(r, a)), induce_frobenius(chi_power(r, b))) << r << " " << a << " " << b;
}

TEST(Induction, NonRationalSumIsInternalError) {
  // A lone root of unity at one power is not a class-function combination of
  // characters, so some grouped sum stays irrational.
  std::vector<CycloElem> values(3, CycloElem(3, Rat(0)));
  values[0] = CycloElem::root_power(3, 1);
  EXPECT_THROW(induce_frobenius(CyclicClassFunction(3, values)), InternalError);
}

TEST(Klyachko, ClassicalAndSuper) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(induce_frobenius(chi_power(n, 1)), super_brandt_char(n, 0)) << n;
  EXPECT_EQ(super_klyachko_char(1, 1), SymFunc::p(Partition{1, 1}));
  for (int total = 1; total <= 8; ++total)
    for (int m = 0; m <= total; ++m)
      EXPECT_TRUE(same_function(super_klyachko_char(total - m, m), super_brandt_char(total - m, m)))
          << total - m << "," << m;
}

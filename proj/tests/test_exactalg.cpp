#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "superlie/errors.hpp"
#include "superlie/exactalg.hpp"

using namespace superlie;

namespace {
QPoly qp(std::vector<Rat> c) { return QPoly(std::move(c)); }
}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-7")), "-7");
  EXPECT_EQ(to_string(Rat(1) / 3 + Rat(1) / 6), "1/2");
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("abc"), ParseError);
}

TEST(Integers, BinomialAgainstPascal) {
  std::vector<std::vector<BigInt>> pascal(30);
  for (int a = 0; a < 30; ++a) {
    pascal[a].assign(a + 1, 1);
    for (int b = 1; b < a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
  }
  for (int a = 0; a < 30; ++a)
    for (int b = 0; b <= a; ++b) EXPECT_EQ(binom(a, b), pascal[a][b]);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(3, -1), 0);
}

TEST(Integers, FactorialMobiusPhi) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  // mu by trial factorization; phi by counting coprime residues.
  for (long n = 1; n <= 200; ++n) {
    long m = n, mu = 1;
    for (long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
    if (mu != 0 && m > 1) mu = -mu;
    EXPECT_EQ(mobius(n), mu) << n;
    long phi = 0;
    for (long k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), phi) << n;
    long mu_sum = 0;
    for (long d : divisors(n)) mu_sum += mobius(d);
    EXPECT_EQ(mu_sum, n == 1 ? 1 : 0);
  }
}

TEST(Integers, DivisorsAndGcdConvention) {
  EXPECT_EQ(divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<long>{1}));
  EXPECT_EQ(gcd_convention(6, 0), 6);
  EXPECT_EQ(gcd_convention(0, 4), 4);
  EXPECT_EQ(gcd_convention(4, 6), 2);
}

TEST(QPoly, ArithmeticAndDivision) {
  QPoly a = qp({1, -1});  // 1 - q
  QPoly b = qp({1, 1});  // 1 + q
  EXPECT_EQ((a * b).to_string(), "1 - q^2");
  EXPECT_EQ(((a * b).divide_exact(a)).to_string(), "1 + q");
  EXPECT_THROW(qp({1, 0, 1}).divide_exact(a), InternalError);
  auto [quo, rem] = qp({2, 0, 1}).divmod(qp({0, 1}));
  EXPECT_EQ(quo.to_string(), "q");
  EXPECT_EQ(rem.to_string(), "2");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.evaluate(3), -2);
}

TEST(QTPoly, Basics) {
  QTPoly f = (QTPoly(1) + QTPoly::t()) * (QTPoly(1) + QTPoly::q() * QTPoly::t());
  EXPECT_EQ(f.to_string(), "1 + t + q*t + q*t^2");
  EXPECT_EQ(f.substitute_powers(2).coeff(2, 4), 1);
  EXPECT_EQ(f.t_coefficient(1).to_string(), "1 + q");
  EXPECT_EQ(f.evaluate(2, 3), (1 + 3) * (1 + 2 * 3));
  EXPECT_EQ(f.pow(2), f * f);
  EXPECT_EQ(f.truncated_q(0).to_string(), "1 + t");
  EXPECT_EQ(q_int(3).to_string(), "1 + q + q^2");
  EXPECT_EQ(q_pochhammer(2).to_string(), "1 - q - q^2 + q^3");
  EXPECT_EQ(q_factorial(3).evaluate(1, 0), 6);
}

TEST(Cyclotomic, ProductOverDivisorsIsQnMinusOne) {
  EXPECT_EQ(cyclotomic_poly(1).to_string(), "-1 + q");
  EXPECT_EQ(cyclotomic_poly(6).to_string(), "1 - q + q^2");
  for (int n = 1; n <= 30; ++n) {
    QPoly prod(1);
    for (long d : divisors(n)) prod *= cyclotomic_poly(static_cast<int>(d));
    EXPECT_EQ(prod, QPoly::monomial(1, n) - QPoly(1)) << n;
    EXPECT_EQ(cyclotomic_poly(n).degree(), euler_phi(n));
  }
}

TEST(Cyclotomic, RamanujanSums) {
  // Sum of zeta^{k s} over k coprime to d equals sum_{e | gcd(s, d)} mu(d / e) e.
  for (int d = 1; d <= 15; ++d)
    for (int s = 0; s < d; ++s) {
      CycloElem sum(d, Rat(0));
      for (int k = 1; k <= d; ++k)
        if (std::gcd(k, d) == 1) sum += CycloElem::root_power(d, static_cast<long>(k) * s);
      long expected = 0;
      for (long e : divisors(std::gcd(s, d))) expected += mobius(d / e) * e;
      ASSERT_TRUE(sum.is_rational());
      EXPECT_EQ(sum.rational_value(), expected) << d << " " << s;
    }
}

TEST(Cyclotomic, RootArithmetic) {
  CycloElem i = CycloElem::root_power(4, 1);
  EXPECT_EQ(i * i, CycloElem(4, Rat(-1)));
  EXPECT_EQ(CycloElem::root_power(5, -1) * CycloElem::root_power(5, 1), CycloElem(5, Rat(1)));
  EXPECT_EQ(cyclo_reduce(qp({1, -1}), 2), CycloElem(2, Rat(2)));
  EXPECT_THROW(CycloElem::root_power(3, 1).rational_value(), InternalError);
  EXPECT_THROW(CycloElem(3, Rat(1)) + CycloElem(4, Rat(1)), DomainError);
}

TEST(MultiPoly, TruncationAndEvaluation) {
  MultiPoly x = MultiPoly::x(2, 1, 0, 3), y = MultiPoly::y(2, 1, 0, 3);
  MultiPoly f = (x + y) * (x + y);
  EXPECT_EQ(f.terms().size(), 3u);
  MultiPoly g = f * f;  // degree 4 terms dropped by the cap
  EXPECT_TRUE(g.is_zero());
  std::vector<Rat> vals{2, 5, 3};
  EXPECT_EQ(f.evaluate(vals), 25);
  EXPECT_EQ(f.homogeneous_slice(2), f);
}

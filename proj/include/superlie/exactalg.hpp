#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superlie {

using BigInt = mpz_class;
using Rat = mpq_class;  // gmp keeps results canonical (lowest terms, den > 0)

std::string to_string(const Rat& r);
Rat parse_rat(std::string_view text);

BigInt binom(long a, long b);  // 0 outside 0 <= b <= a
BigInt factorial(long n);
int mobius(long d);
long gcd_convention(long n, long m);  // gcd(n, 0) = n, gcd(0, m) = m
std::vector<long> divisors(long n);
long euler_phi(long n);

// Dense univariate polynomial in q over Rat. coeffs()[k] is the q^k coefficient;
// no trailing zeros are stored, so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  QPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  QPoly(long constant) : QPoly(Rat(constant)) {}  // NOLINT

  static QPoly monomial(const Rat& c, int exponent);
  static QPoly q() { return monomial(1, 1); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int k) const;
  Rat evaluate(const Rat& q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  // Throws InternalError when the remainder is nonzero.
  QPoly divide_exact(const QPoly& divisor) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

// Sparse polynomial in q, t with exact rational coefficients. Terms are kept in a
// sorted map keyed by (q exponent, t exponent) with no zero entries, so structural
// equality is polynomial equality.
class QTPoly {
 public:
  using Exponent = std::pair<int, int>;

  QTPoly() = default;
  QTPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  QTPoly(long constant) : QTPoly(Rat(constant)) {}  // NOLINT
  static QTPoly monomial(const Rat& c, int q_exp, int t_exp);
  static QTPoly q() { return monomial(1, 1, 0); }
  static QTPoly t() { return monomial(1, 0, 1); }
  static QTPoly from_qpoly(const QPoly& p);

  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat coeff(int q_exp, int t_exp) const;
  int q_degree() const;  // -1 for zero
  int t_degree() const;

  void add_term(int q_exp, int t_exp, const Rat& c);

  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  QTPoly& operator*=(const QTPoly& o);
  QTPoly& operator*=(const Rat& c);
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  friend QTPoly operator*(QTPoly a, const Rat& c) { return a *= c; }
  friend QTPoly operator*(const Rat& c, QTPoly a) { return a *= c; }
  QTPoly operator-() const;
  bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }

  QTPoly pow(int e) const;
  // q -> q^d, t -> t^d.
  QTPoly substitute_powers(int d) const;
  Rat evaluate(const Rat& q, const Rat& t) const;
  // Coefficient of t^b as a polynomial in q.
  QPoly t_coefficient(int b) const;
  // Drop every term whose q exponent exceeds cap.
  QTPoly truncated_q(int cap) const;
  // Exact division of every t-slice by a polynomial in q alone.
  QTPoly divide_exact(const QPoly& divisor) const;

  // e.g. "1 + t + q*t + q*t^2"; "0" for zero.
  std::string to_string() const;

 private:
  std::map<Exponent, Rat> terms_;
};

QTPoly q_int(int n);
QTPoly q_factorial(int n);
QTPoly q_pochhammer(int n);  // (q;q)_n

// Phi_d(q), monic with integer coefficients. Memoized.
const QPoly& cyclotomic_poly(int d);

// Element of Q[q] / Phi_d(q): exact arithmetic in Q(zeta_d), zeta_d realized by q.
class CycloElem {
 public:
  CycloElem(int modulus, const QPoly& p);
  CycloElem(int modulus, const Rat& c) : CycloElem(modulus, QPoly(c)) {}
  static CycloElem root_power(int modulus, long k);  // zeta_d^k, any integer k

  int modulus() const { return modulus_; }
  const QPoly& representative() const { return rep_; }
  bool is_rational() const { return rep_.degree() <= 0; }
  // Throws InternalError unless is_rational().
  Rat rational_value() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  bool operator==(const CycloElem& o) const {
    return modulus_ == o.modulus_ && rep_ == o.rep_;
  }

  std::string to_string() const;

 private:
  void check_same_modulus(const CycloElem& o) const;
  int modulus_;
  QPoly rep_;
};

CycloElem cyclo_reduce(const QPoly& p, int d);

// Truncated polynomial in N x-variables followed by M y-variables. Terms of total
// degree above the cap are dropped on insertion; every series comparison in this
// library is made per fixed degree, so silent truncation is safe.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  static constexpr int kNoCap = INT_MAX;

  MultiPoly(int n_x, int n_y, int degree_cap = kNoCap);
  static MultiPoly constant(int n_x, int n_y, const Rat& c, int degree_cap = kNoCap);
  static MultiPoly x(int n_x, int n_y, int i, int degree_cap = kNoCap);  // 0-based
  static MultiPoly y(int n_x, int n_y, int j, int degree_cap = kNoCap);

  int n_x() const { return n_x_; }
  int n_y() const { return n_y_; }
  int degree_cap() const { return cap_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rat& c);
  MultiPoly homogeneous_slice(int degree) const;
  Rat evaluate(std::span<const Rat> values) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  // Compares variable counts and terms, not caps.
  bool operator==(const MultiPoly& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  int n_x_, n_y_, cap_;
  std::map<Exponents, Rat> terms_;
};

}  // namespace superlie

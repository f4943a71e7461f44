#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "superlie/exactalg.hpp"
#include "superlie/partition.hpp"

namespace superlie {

enum class Basis { p, s, h, e, m };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);  // throws ParseError

// Symmetric function in one alphabet x, as a finite sum of basis elements with
// coefficients in Q[q, t]. Homogeneity is not required.
class SymFunc {
 public:
  using Terms = std::map<Partition, QTPoly>;

  explicit SymFunc(Basis basis = Basis::p) : basis_(basis) {}
  static SymFunc element(Basis basis, const Partition& lambda, const QTPoly& coeff = QTPoly(1));
  static SymFunc p(const Partition& lambda) { return element(Basis::p, lambda); }
  static SymFunc s(const Partition& lambda) { return element(Basis::s, lambda); }
  static SymFunc h(const Partition& lambda) { return element(Basis::h, lambda); }
  static SymFunc e(const Partition& lambda) { return element(Basis::e, lambda); }
  static SymFunc m(const Partition& lambda) { return element(Basis::m, lambda); }
  static SymFunc one() { return element(Basis::p, Partition{}); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QTPoly coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const QTPoly& c);
  // Sorted distinct degrees of the terms.
  std::vector<int> degrees() const;
  SymFunc homogeneous_part(int degree) const;
  // Map every coefficient through fn (basis and index set unchanged, zeros dropped).
  template <typename Fn>
  SymFunc map_coefficients(Fn&& fn) const {
    SymFunc r(basis_);
    for (const auto& [lambda, c] : terms_) r.add_term(lambda, fn(c));
    return r;
  }

  // Sums and differences of functions in different bases are taken in p.
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const QTPoly& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const QTPoly& c) { return a *= c; }
  friend SymFunc operator*(const QTPoly& c, SymFunc a) { return a *= c; }
  // Structural equality (same basis, same terms). Use same_function() across bases.
  bool operator==(const SymFunc& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }

  // e.g. "1/2*p_{11} - 1/2*p_2", "(1 + t)*s_2"; "0" for zero.
  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

// Index string used in rendering: "2", "{11}", "{(10,2)}" when a part exceeds 9.
std::string compact_index(const Partition& lambda);

// Class function on S_n, indexed by cycle type.
struct ClassFunctionSn {
  int n = 0;
  std::map<Partition, Rat> values;
};

// chi^lambda(mu) by Murnaghan-Nakayama border-strip removal, memoized in the
// process-wide CharacterTable.
long mn_character(const Partition& lambda, const Partition& mu);
ClassFunctionSn irreducible_character(const Partition& lambda);

// Memoized S_n character values. Single writer, many readers.
class CharacterTable {
 public:
  struct Row {
    Partition lambda, mu;
    long value;
  };

  static CharacterTable& global();

  long value(const Partition& lambda, const Partition& mu);
  // Fill every chi^lambda(mu) with |lambda| <= max_n.
  void warm(int max_n);
  // Rows for all lambda, mu of size 1..max_n in deterministic partition order.
  std::vector<Row> rows(int max_n);
  void load(const std::vector<Row>& rows);
  void clear();
  std::size_t size() const;

 private:
  long compute(const Partition& lambda, const Partition& mu);
  mutable std::shared_mutex mu_;
  std::map<std::pair<Partition, Partition>, long> values_;
};

SymFunc to_p(const SymFunc& f);
SymFunc to_basis(const SymFunc& f, Basis target);
SymFunc p_to_s(const SymFunc& f);
SymFunc s_to_p(const SymFunc& f);
// Equality as symmetric functions, regardless of stored basis.
bool same_function(const SymFunc& a, const SymFunc& b);

SymFunc multiply(const SymFunc& f, const SymFunc& g);  // result in p
SymFunc power(const SymFunc& f, int k);                // result in p
SymFunc frobenius_characteristic(const ClassFunctionSn& chi);

// p_d o f: p_k -> p_{dk}, q -> q^d, t -> t^d on coefficients (the lambda-ring
// convention for coefficients in Q[q, t]). Result in p.
SymFunc plethysm_p(int d, const SymFunc& f);
SymFunc h_pleth(int a, const SymFunc& f);
SymFunc e_pleth(int a, const SymFunc& f);

struct SchurExpansion {
  std::map<Partition, QTPoly> coeffs;
  // Every coefficient is a polynomial with nonnegative integer coefficients.
  bool nonnegative_integral = true;
};
SchurExpansion schur_expand(const SymFunc& f);

// Symmetric function in two alphabets x, y, stored in the basis p_lambda(x) p_mu(y).
// p_d(-y) is never stored: callers normalize it to (-1)^d p_d(y) via p_neg_y().
class BiSymFunc {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, QTPoly>;

  BiSymFunc() = default;
  static BiSymFunc p(const Partition& lambda, const Partition& mu, const QTPoly& coeff = QTPoly(1));
  static BiSymFunc one() { return p(Partition{}, Partition{}); }
  static BiSymFunc from_x(const SymFunc& f);
  static BiSymFunc from_y(const SymFunc& f);
  // p_d(-y) = (-1)^d p_d(y).
  static BiSymFunc p_neg_y(int d);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QTPoly coeff(const Partition& lambda, const Partition& mu) const;
  void add_term(const Partition& lambda, const Partition& mu, const QTPoly& c);

  BiSymFunc& operator+=(const BiSymFunc& o);
  BiSymFunc& operator-=(const BiSymFunc& o);
  BiSymFunc& operator*=(const QTPoly& c);
  friend BiSymFunc operator+(BiSymFunc a, const BiSymFunc& b) { return a += b; }
  friend BiSymFunc operator-(BiSymFunc a, const BiSymFunc& b) { return a -= b; }
  friend BiSymFunc operator*(BiSymFunc a, const QTPoly& c) { return a *= c; }
  bool operator==(const BiSymFunc& o) const { return terms_ == o.terms_; }

  // e.g. "p_{11}(x)p_1(y)"; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

BiSymFunc bi_multiply(const BiSymFunc& f, const BiSymFunc& g);
BiSymFunc bi_power(const BiSymFunc& f, int k);
BiSymFunc bi_plethysm_p(int d, const BiSymFunc& f);
BiSymFunc bi_h_pleth(int a, const BiSymFunc& f);
BiSymFunc bi_e_pleth(int a, const BiSymFunc& f);
// Set y = x: p_lambda(x) p_mu(x) = p_{lambda u mu}(x).
SymFunc diagonal(const BiSymFunc& f);

// p_k -> x_1^k + ... + x_N^k. Coefficients must be rational constants.
MultiPoly expand_truncated(const SymFunc& f, int n_vars, int degree_cap = MultiPoly::kNoCap);
MultiPoly bi_expand_truncated(const BiSymFunc& f, int n_x, int n_y, int degree_cap = MultiPoly::kNoCap);

}  // namespace superlie

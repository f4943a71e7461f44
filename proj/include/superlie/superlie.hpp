#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superlie/exactalg.hpp"
#include "superlie/report.hpp"
#include "superlie/symfunc.hpp"

namespace superlie {

// Multiplicities a_{i,j} of the bigraded pieces in a super Lie module. Finite
// support, a_{0,0} = 0, all stored values positive.
class SupportMatrix {
 public:
  using Cell = std::pair<int, int>;

  SupportMatrix() = default;
  explicit SupportMatrix(std::map<Cell, int> entries);  // throws DomainError

  const std::map<Cell, int>& entries() const { return entries_; }
  int at(int i, int j) const;
  // (sum i * a_ij, sum j * a_ij)
  std::pair<int, int> bidegree() const;

  // "[[i,j,a],...]" in support order.
  std::string to_json_string() const;
  static SupportMatrix parse_json(const std::string& text);  // throws ParseError

  bool operator==(const SupportMatrix&) const = default;

 private:
  std::map<Cell, int> entries_;
};

// Character of the bidegree-(n, m) piece of the free Lie superalgebra with the
// diagonal action (y = x). Divisors run over d | n and d | m.
SymFunc super_brandt_char(int n, int m);
// Same piece as a GL(N) + GL(M) character in two alphabets.
BiSymFunc super_bi_brandt_char(int n, int m);
// Two-alphabet Schur expansion, e.g. "(1)*s_1(x)s_1(y)", for display.
std::string bi_schur_string(const BiSymFunc& f);
// Dimension when dim V_0 = dim V_1 = N.
BigInt super_witt_dim(int n, int m, long n_dim);

// Coefficients of q^n t^m in -sum_d mu(d)/d log(1 - (q^d p_d(x) - t^d p_d(-y))),
// expanded as a formal power series, for 0 <= n <= max_n, 0 <= m <= max_m,
// (n, m) != (0, 0).
std::map<std::pair<int, int>, BiSymFunc> petrogradsky_series(int max_n, int max_m);

// Symmetric power (j even) or exterior power (j odd) of degree a.
BiSymFunc gamma_char(int j, int a, const BiSymFunc& f);
BiSymFunc super_lie_module_char(const SupportMatrix& a);
std::vector<SupportMatrix> enumerate_bidegree_matrices(int n, int m);

// Sum over all A of bidegree (n, m) of the module characters against the tensor
// character binom(n+m, m) p_1(x)^n p_1(y)^m.
CheckReport thrall_sum_check(int n, int m);

inline constexpr int kBruteForceMaxDegree = 6;
inline constexpr int kBruteForceMaxDim = 3;

// Dimension of the span of all bracketings with n even and m odd generators inside
// the tensor superalgebra, with dim V_0 = n_dim and dim V_1 = m_dim. Exact rank.
long brute_force_lie_dim(int n, int m, int n_dim, int m_dim);

}  // namespace superlie

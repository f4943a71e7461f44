#pragma once

#include <map>
#include <vector>

#include "superlie/exactalg.hpp"
#include "superlie/partition.hpp"
#include "superlie/report.hpp"
#include "superlie/symfunc.hpp"
#include "superlie/tableau.hpp"

namespace superlie {

inline constexpr int kDefaultQCap = 12;

// A power series in q (polynomial in t) known through q^q_cap.
struct SpecSeries {
  QTPoly coefficients;
  int q_cap = kDefaultQCap;

  bool operator==(const SpecSeries& o) const { return q_cap == o.q_cap && coefficients == o.coefficients; }
};

// Q_{n,D}(x_1..x_N): weakly increasing words with a_i = a_{i+1} only when i is not in D.
MultiPoly fundamental_qsym_truncated(int n, Subset d, int n_vars);
// Super version over 1 < 1' < 2 < 2' < ... with N positive and M barred letters.
// Equal positive neighbours need i not in D, equal barred neighbours need i in D.
MultiPoly super_qsym_truncated(int n, Subset d, int n_x, int n_y);
MultiPoly super_schur_truncated(const Partition& lambda, int n_x, int n_y);
CheckReport super_cauchy_check(int n, int n_x, int n_y);

// Q~_{n,D}(1, q, q^2, ...; t, tq, tq^2, ...) by enumerating words.
SpecSeries qsym_principal_spec(int n, Subset d, int q_cap = kDefaultQCap);
// (1/(q;q)_n) sum_S q^{comaj(D,S)} t^{|S|}, expanded through q_cap.
SpecSeries qsym_principal_formula(int n, Subset d, int q_cap = kDefaultQCap);
CheckReport qps_check(int n, Subset d, int q_cap = kDefaultQCap);

// 1/(q;q)_n through q^cap.
QTPoly inverse_pochhammer_series(int n, int cap);

// [n]_q! prod (q^{r-1} + t q^{c-1}) / [h(r,c)]_q. Throws InternalError if a division
// leaves a remainder.
QTPoly hook_product(const Partition& lambda);
CheckReport hook_formula_check(const Partition& lambda, std::uint64_t budget = kDefaultEnumerationBudget);
// sum_{T in SYT} q^maj(T) against q^{n(lambda)} [n]_q! / prod [h]_q, and against the
// t = 0 slice of the super generating function.
CheckReport classical_hook_check(const Partition& lambda);
CheckReport s_ps_check(const Partition& lambda, int q_cap = kDefaultQCap);
// (q;q)_n times the summed principal specializations against hook_product.
CheckReport qt_hook_consistency_check(const Partition& lambda, int q_cap = kDefaultQCap);

QPoly pi_lambda(const Partition& lambda);
CheckReport pi_root_check(const Partition& lambda, int d);

// Keep q^a t^b with a = s mod r, then set q = 1.
QTPoly omega_extract(const QTPoly& f, int r, int s);
SymFunc omega_extract(const SymFunc& f, int r, int s);
// (1/r) sum over r-th roots zeta of zeta^{-s} f(zeta, t), in exact cyclotomic
// arithmetic. Throws InternalError if a t-coefficient is not rational.
QTPoly omega_root_average(const QTPoly& f, int r, int s);

// sum_{lambda |- n_total} s_lambda * maj_neg_generating_poly(lambda). Memoized.
SymFunc kw_generating_function(int n_total);
CheckReport kw_check(int n, int m);

// m//2: m/2 for even m, 0 for odd m.
int half_floor(int m);
// residue -> #{T in SYT_+-(lambda) : maj(T) = residue mod r_total, negg(T) = m}.
std::map<int, BigInt> symmetry_counts(const Partition& lambda, int r_total, int m);
// Equal counts over SYT(lambda), n = |lambda|, for residues with equal gcd(r, n).
CheckReport sym1_check(const Partition& lambda);
// Equal super counts (negg = m) for residues with equal gcd(r + m//2, |lambda|).
CheckReport sym2_check(const Partition& lambda, int m);
// n = |lambda| - m and m odd: counts with negg = m and negg = n agree residue by residue.
CheckReport sym3_check(const Partition& lambda, int m);

// Three reports: h_d[e_2] (even columns), h_d[h_2] (even parts), e_d[h_2 + e_2] convolution.
std::vector<CheckReport> degree_two_checks(int d);

}  // namespace superlie

#pragma once

#include <vector>

#include "superlie/exactalg.hpp"
#include "superlie/symfunc.hpp"

namespace superlie {

// Class function on C_r = <pi_r>, pi_r = (1 2 ... r). values()[k-1] is the value at
// pi_r^k for k = 1..r, so the identity sits at k = r.
class CyclicClassFunction {
 public:
  CyclicClassFunction(int order, std::vector<CycloElem> values);  // throws DomainError

  int order() const { return order_; }
  const std::vector<CycloElem>& values() const { return values_; }
  // Any integer k, taken mod r (k = 0 is the identity).
  const CycloElem& at(long k) const;

  bool operator==(const CyclicClassFunction& o) const { return order_ == o.order_ && values_ == o.values_; }

 private:
  int order_;
  std::vector<CycloElem> values_;
};

// chi(pi^k) = zeta_r^{k0 k}.
CyclicClassFunction chi_power(int r, long k0);
// Permutation character of C_{n+m} on m-subsets of [n+m], closed form.
CyclicClassFunction chi_cyc(int n, int m);
inline constexpr int kChiCycOracleMax = 16;
// The same character by counting fixed subsets directly.
CyclicClassFunction chi_cyc_oracle(int n, int m);
CyclicClassFunction pointwise_product(const CyclicClassFunction& a, const CyclicClassFunction& b);

// Frobenius characteristic of the induced character, grouped by cycle type of pi^k.
// Throws InternalError if a grouped root-of-unity sum fails to be rational.
SymFunc induce_frobenius(const CyclicClassFunction& chi);
inline constexpr int kInduceOracleMax = 7;
// Induced character on S_r by conjugating one representative per cycle type over
// all of S_r.
ClassFunctionSn induce_oracle(const CyclicClassFunction& chi);

// chi^cyc (x) chi^1 for odd m, chi^cyc (x) chi^{m/2 + 1} for even m, induced to S_{n+m}.
SymFunc super_klyachko_char(int n, int m);

}  // namespace superlie

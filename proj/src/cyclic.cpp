#include "superlie/cyclic.hpp"

#include <algorithm>
#include <numeric>

#include "superlie/errors.hpp"

namespace superlie {

CyclicClassFunction::CyclicClassFunction(int order, std::vector<CycloElem> values)
    : order_(order), values_(std::move(values)) {
  if (order < 1) throw DomainError("cyclic group order must be positive");
  if (values_.size() != static_cast<std::size_t>(order))
    throw DomainError("cyclic class function needs one value per power");
  for (const auto& v : values_)
    if (v.modulus() != order) throw DomainError("cyclic class function values must live mod Phi_r");
}

const CycloElem& CyclicClassFunction::at(long k) const {
  long idx = ((k % order_) + order_) % order_;
  if (idx == 0) idx = order_;
  return values_[static_cast<std::size_t>(idx - 1)];
}

CyclicClassFunction chi_power(int r, long k0) {
  if (r < 1) throw DomainError("chi_power: r must be positive");
  std::vector<CycloElem> vals;
  for (long k = 1; k <= r; ++k) vals.push_back(CycloElem::root_power(r, k0 * k));
  return {r, std::move(vals)};
}

CyclicClassFunction chi_cyc(int n, int m) {
  if (n < 0 || m < 0 || n + m == 0) throw DomainError("chi_cyc: need (n, m) != (0, 0)");
  const int r = n + m;
  std::vector<CycloElem> vals;
  for (int k = 1; k <= r; ++k) {
    int d = r / std::gcd(k, r);  // cycle length of pi^k
    Rat v = m % d == 0 ? Rat(binom(r / d, m / d)) : Rat(0);
    vals.emplace_back(r, v);
  }
  return {r, std::move(vals)};
}

CyclicClassFunction chi_cyc_oracle(int n, int m) {
  if (n < 0 || m < 0 || n + m == 0) throw DomainError("chi_cyc_oracle: need (n, m) != (0, 0)");
  const int r = n + m;
  if (r > kChiCycOracleMax) throw ResourceError("chi_cyc_oracle: n + m exceeds 16");
  const std::uint32_t full = (std::uint32_t{1} << r) - 1;
  std::vector<CycloElem> vals;
  for (int k = 1; k <= r; ++k) {
    long fixed = 0;
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (__builtin_popcount(s) != m) continue;
      // rotate the subset by k positions
      std::uint32_t rot = ((s << (k % r)) | (s >> (r - k % r))) & full;
      if (k % r == 0) rot = s;
      if (rot == s) ++fixed;
    }
    vals.emplace_back(r, Rat(fixed));
  }
  return {r, std::move(vals)};
}

CyclicClassFunction pointwise_product(const CyclicClassFunction& a, const CyclicClassFunction& b) {
  if (a.order() != b.order()) throw DomainError("pointwise_product: order mismatch");
  std::vector<CycloElem> vals;
  for (std::size_t i = 0; i < a.values().size(); ++i) vals.push_back(a.values()[i] * b.values()[i]);
  return {a.order(), std::move(vals)};
}

SymFunc induce_frobenius(const CyclicClassFunction& chi) {
  const int r = chi.order();
  SymFunc out(Basis::p);
  for (long d : divisors(r)) {
    CycloElem inner(r, Rat(0));
    for (int k = 1; k <= r; ++k)
      if (std::gcd(k, r) == r / d) inner += chi.at(k);
    if (!inner.is_rational())
      throw InternalError("induce_frobenius: root-of-unity sum for d = " + std::to_string(d) +
                          " is not rational: " + inner.to_string());
    Rat c = inner.rational_value() / r;
    out.add_term(rectangle(static_cast<int>(d), static_cast<int>(r / d)), QTPoly(c));
  }
  return out;
}

namespace {

// Permutations on {0..r-1} as images.
using Perm = std::vector<int>;

Perm representative(const Partition& mu) {
  Perm p(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int len : mu.parts()) {
    for (int i = 0; i < len; ++i) p[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  return p;
}

}  // namespace

ClassFunctionSn induce_oracle(const CyclicClassFunction& chi) {
  const int r = chi.order();
  if (r > kInduceOracleMax) throw ResourceError("induce_oracle: r exceeds 7");
  ClassFunctionSn out;
  out.n = r;
  for (const auto& mu : partitions_of(r)) {
    const Perm sigma = representative(mu);
    CycloElem sum(r, Rat(0));
    Perm x(static_cast<std::size_t>(r)), x_inv(static_cast<std::size_t>(r));
    std::iota(x.begin(), x.end(), 0);
    do {
      for (int i = 0; i < r; ++i) x_inv[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] = i;
      // g = x^{-1} sigma x, composed right to left: g(i) = x^{-1}(sigma(x(i))).
      const int shift = (x_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x[0])])] + r) % r;
      bool rotation = true;
      for (int i = 0; i < r && rotation; ++i) {
        int g = x_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])])];
        rotation = g == (i + shift) % r;
      }
      if (rotation) sum += chi.at(shift);
    } while (std::next_permutation(x.begin(), x.end()));
    if (!sum.is_rational()) throw InternalError("induce_oracle: non-rational induced value on " + mu.to_string());
    out.values[mu] = sum.rational_value() / r;
  }
  return out;
}

SymFunc super_klyachko_char(int n, int m) {
  if (n < 0 || m < 0 || n + m == 0) throw DomainError("super_klyachko_char: need (n, m) != (0, 0)");
  const int r = n + m;
  const long exponent = m % 2 == 1 ? 1 : m / 2 + 1;
  return induce_frobenius(pointwise_product(chi_cyc(n, m), chi_power(r, exponent)));
}

}  // namespace superlie

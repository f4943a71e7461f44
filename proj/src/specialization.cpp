#include "superlie/specialization.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <set>

#include "superlie/errors.hpp"
#include "superlie/superlie.hpp"

namespace superlie {

namespace {

std::string monomial_name(int a, int b) { return "q^" + std::to_string(a) + " t^" + std::to_string(b); }

std::string first_discrepancy(const QTPoly& x, const QTPoly& y) {
  std::set<QTPoly::Exponent> keys;
  for (const auto& [e, c] : x.terms()) keys.insert(e);
  for (const auto& [e, c] : y.terms()) keys.insert(e);
  for (const auto& e : keys) {
    Rat a = x.coeff(e.first, e.second), b = y.coeff(e.first, e.second);
    if (a != b) return monomial_name(e.first, e.second) + ": " + to_string(a) + " vs " + to_string(b);
  }
  return "";
}

std::string exponent_name(const MultiPoly::Exponents& e, int n_x) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    bool is_x = static_cast<int>(i) < n_x;
    s += (is_x ? "x" : "y") + std::to_string(is_x ? i + 1 : i + 1 - static_cast<std::size_t>(n_x));
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string first_discrepancy(const MultiPoly& x, const MultiPoly& y) {
  std::set<MultiPoly::Exponents> keys;
  for (const auto& [e, c] : x.terms()) keys.insert(e);
  for (const auto& [e, c] : y.terms()) keys.insert(e);
  for (const auto& e : keys) {
    auto ix = x.terms().find(e), iy = y.terms().find(e);
    Rat a = ix == x.terms().end() ? Rat(0) : ix->second;
    Rat b = iy == y.terms().end() ? Rat(0) : iy->second;
    if (a != b) return exponent_name(e, x.n_x()) + ": " + to_string(a) + " vs " + to_string(b);
  }
  return "";
}

std::string schur_string(const std::map<Partition, QTPoly>& coeffs) {
  SymFunc f(Basis::s);
  for (const auto& [lambda, c] : coeffs) f.add_term(lambda, c);
  return f.to_string();
}

std::string first_discrepancy(const std::map<Partition, QTPoly>& x, const std::map<Partition, QTPoly>& y) {
  std::set<Partition> keys;
  for (const auto& [k, c] : x) keys.insert(k);
  for (const auto& [k, c] : y) keys.insert(k);
  for (const auto& k : keys) {
    auto ix = x.find(k), iy = y.find(k);
    QTPoly a = ix == x.end() ? QTPoly() : ix->second;
    QTPoly b = iy == y.end() ? QTPoly() : iy->second;
    if (!(a == b)) return "s_" + compact_index(k) + ": " + a.to_string() + " vs " + b.to_string();
  }
  return "";
}

std::string counts_string(const std::map<int, BigInt>& counts) {
  std::string s = "{";
  for (const auto& [r, c] : counts) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(r) + ": " + c.get_str();
  }
  return s + "}";
}

CheckReport make_report(std::string check, nlohmann::ordered_json params) {
  CheckReport r;
  r.check = std::move(check);
  r.parameters = std::move(params);
  return r;
}

void finish(CheckReport& r, const QTPoly& lhs, const QTPoly& rhs) {
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.first_discrepancy = first_discrepancy(lhs, rhs);
  r.passed = r.first_discrepancy.empty();
}

// Letters of the signed alphabet 1 < 1' < 2 < 2' < ... encoded as 2 * (value - 1) + barred.
template <typename Visit>
void for_each_signed_word(int n, Subset d, const std::function<bool(int)>& allowed, int max_letter,
                          Visit&& visit) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n) {
      visit(word);
      return;
    }
    for (int letter = lo; letter <= max_letter; ++letter) {
      if (!allowed(letter)) continue;
      if (pos > 0 && letter == word[static_cast<std::size_t>(pos - 1)]) {
        bool barred = letter % 2 == 1;
        bool in_d = d.contains(pos);
        if (barred != in_d) continue;
      }
      word[static_cast<std::size_t>(pos)] = letter;
      rec(pos + 1, letter);
    }
  };
  rec(0, 0);
}

std::vector<std::pair<Subset, long>> descent_classes(const Partition& lambda) {
  std::map<Subset, long> counts;
  for (const auto& t : syt_enumerate(lambda)) ++counts[descent_set(t)];
  return {counts.begin(), counts.end()};
}

}  // namespace

MultiPoly fundamental_qsym_truncated(int n, Subset d, int n_vars) {
  if (n < 1 || n_vars < 1) throw DomainError("fundamental_qsym_truncated: need n >= 1 and N >= 1");
  MultiPoly out(n_vars, 0);
  std::vector<int> word(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n) {
      MultiPoly::Exponents e(static_cast<std::size_t>(n_vars), 0);
      for (int a : word) ++e[static_cast<std::size_t>(a)];
      out.add_term(e, 1);
      return;
    }
    for (int a = lo; a < n_vars; ++a) {
      if (pos > 0 && a == word[static_cast<std::size_t>(pos - 1)] && d.contains(pos)) continue;
      word[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1, a);
    }
  };
  rec(0, 0);
  return out;
}

MultiPoly super_qsym_truncated(int n, Subset d, int n_x, int n_y) {
  if (n < 1 || n_x < 0 || n_y < 0) throw DomainError("super_qsym_truncated: need n >= 1");
  MultiPoly out(n_x, n_y);
  auto allowed = [&](int letter) { return letter % 2 == 0 ? letter / 2 < n_x : letter / 2 < n_y; };
  for_each_signed_word(n, d, allowed, 2 * std::max(n_x, n_y) - 1, [&](const std::vector<int>& word) {
    MultiPoly::Exponents e(static_cast<std::size_t>(n_x + n_y), 0);
    for (int letter : word) {
      int i = letter / 2;
      ++e[static_cast<std::size_t>(letter % 2 == 0 ? i : n_x + i)];
    }
    out.add_term(e, 1);
  });
  return out;
}

MultiPoly super_schur_truncated(const Partition& lambda, int n_x, int n_y) {
  const int n = lambda.size();
  if (n < 1) throw DomainError("super_schur_truncated: empty shape");
  MultiPoly out(n_x, n_y);
  for (const auto& [d, count] : descent_classes(lambda)) out += super_qsym_truncated(n, d, n_x, n_y) * Rat(count);
  return out;
}

CheckReport super_cauchy_check(int n, int n_x, int n_y) {
  CheckReport r = make_report("super-cauchy", {{"n", n}, {"N", n_x}, {"M", n_y}});
  MultiPoly lhs(n_x, n_y), rhs(n_x, n_y);
  BiSymFunc p_side;
  for (const auto& lambda : partitions_of(n)) {
    lhs += bi_expand_truncated(BiSymFunc::from_x(SymFunc::s(lambda)), n_x, n_y) *
           super_schur_truncated(lambda, n_x, n_y);
    BiSymFunc term = BiSymFunc::p(lambda, Partition{}, QTPoly(Rat(1) / z_lambda(lambda)));
    for (int k : lambda.parts()) {
      BiSymFunc factor = BiSymFunc::p(Partition{k}, Partition{}) +
                         BiSymFunc::p(Partition{}, Partition{k}, QTPoly(k % 2 == 1 ? 1 : -1));
      term = bi_multiply(term, factor);
    }
    p_side += term;
  }
  rhs = bi_expand_truncated(p_side, n_x, n_y);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.first_discrepancy = first_discrepancy(lhs, rhs);
  r.passed = r.first_discrepancy.empty();
  return r;
}

SpecSeries qsym_principal_spec(int n, Subset d, int q_cap) {
  if (n < 1 || q_cap < 0) throw DomainError("qsym_principal_spec: need n >= 1, q_cap >= 0");
  QTPoly out;
  // Every later letter is at least as large, so letter value v costs at least
  // (n - pos) * (v - 1) of the remaining q budget.
  std::vector<int> word(static_cast<std::size_t>(n));
  std::function<void(int, int, int)> rec = [&](int pos, int lo, int used) {
    if (pos == n) {
      int negs = 0;
      for (int letter : word) negs += letter % 2;
      out.add_term(used, negs, 1);
      return;
    }
    for (int letter = lo;; ++letter) {
      int value = letter / 2;
      if (used + (n - pos) * value > q_cap) break;
      if (pos > 0 && letter == word[static_cast<std::size_t>(pos - 1)]) {
        if ((letter % 2 == 1) != d.contains(pos)) continue;
      }
      word[static_cast<std::size_t>(pos)] = letter;
      rec(pos + 1, letter, used + value);
    }
  };
  rec(0, 0, 0);
  return {out, q_cap};
}

QTPoly inverse_pochhammer_series(int n, int cap) {
  QTPoly out(1);
  for (int k = 1; k <= n; ++k) {
    QTPoly geometric;
    for (int e = 0; e <= cap; e += k) geometric.add_term(e, 0, 1);
    out = (out * geometric).truncated_q(cap);
  }
  return out;
}

SpecSeries qsym_principal_formula(int n, Subset d, int q_cap) {
  if (n < 1 || q_cap < 0) throw DomainError("qsym_principal_formula: need n >= 1, q_cap >= 0");
  QTPoly numerator;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Subset s(bits << 1);
    numerator.add_term(relative_comaj(d, s, n), s.size(), 1);
  }
  return {(numerator * inverse_pochhammer_series(n, q_cap)).truncated_q(q_cap), q_cap};
}

CheckReport qps_check(int n, Subset d, int q_cap) {
  CheckReport r = make_report("qps", {{"n", n}, {"D", d.to_string()}, {"q_cap", q_cap}});
  finish(r, qsym_principal_spec(n, d, q_cap).coefficients, qsym_principal_formula(n, d, q_cap).coefficients);
  return r;
}

QTPoly hook_product(const Partition& lambda) {
  QTPoly numerator = q_factorial(lambda.size());
  QPoly denominator(1);
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda[r - 1]; ++c) {
      numerator *= QTPoly::monomial(1, r - 1, 0) + QTPoly::monomial(1, c - 1, 1);
      denominator *= q_int(hook_length(lambda, r, c)).t_coefficient(0);
    }
  return numerator.divide_exact(denominator);
}

CheckReport hook_formula_check(const Partition& lambda, std::uint64_t budget) {
  CheckReport r = make_report("hook", {{"lambda", lambda.to_string()}});
  finish(r, maj_neg_generating_poly(lambda, budget), hook_product(lambda));
  return r;
}

CheckReport classical_hook_check(const Partition& lambda) {
  CheckReport r = make_report("classical-hook", {{"lambda", lambda.to_string()}});
  int b = 0;
  for (int i = 0; i < lambda.length(); ++i) b += i * lambda[i];
  QPoly denominator(1);
  for (int row = 1; row <= lambda.length(); ++row)
    for (int c = 1; c <= lambda[row - 1]; ++c) denominator *= q_int(hook_length(lambda, row, c)).t_coefficient(0);
  QTPoly formula = (QTPoly::monomial(1, b, 0) * q_factorial(lambda.size())).divide_exact(denominator);
  QTPoly syt_side = maj_generating_poly(lambda);
  QTPoly slice = QTPoly::from_qpoly(maj_neg_generating_poly(lambda).t_coefficient(0));
  finish(r, syt_side, formula);
  if (r.passed && !(slice == formula)) {
    r.passed = false;
    r.first_discrepancy = "t = 0 slice: " + first_discrepancy(slice, formula);
  }
  return r;
}

CheckReport s_ps_check(const Partition& lambda, int q_cap) {
  const int n = lambda.size();
  CheckReport r = make_report("sps", {{"lambda", lambda.to_string()}, {"q_cap", q_cap}});
  QTPoly maj_side = maj_neg_generating_poly(lambda);
  QTPoly comaj_side = comaj_neg_generating_poly(lambda);
  finish(r, comaj_side, maj_side);
  if (!r.passed) {
    r.first_discrepancy = "comaj vs maj: " + r.first_discrepancy;
    return r;
  }
  QTPoly series = (comaj_side * inverse_pochhammer_series(n, q_cap)).truncated_q(q_cap);
  QTPoly spec;
  for (const auto& [d, count] : descent_classes(lambda))
    spec += qsym_principal_spec(n, d, q_cap).coefficients * Rat(count);
  finish(r, series, spec);
  if (!r.passed) r.first_discrepancy = "principal specialization: " + r.first_discrepancy;
  return r;
}

CheckReport qt_hook_consistency_check(const Partition& lambda, int q_cap) {
  const int n = lambda.size();
  CheckReport r = make_report("qt-hook", {{"lambda", lambda.to_string()}, {"q_cap", q_cap}});
  QTPoly spec;
  for (const auto& [d, count] : descent_classes(lambda))
    spec += qsym_principal_spec(n, d, q_cap).coefficients * Rat(count);
  finish(r, (q_pochhammer(n) * spec).truncated_q(q_cap), hook_product(lambda).truncated_q(q_cap));
  return r;
}

QPoly pi_lambda(const Partition& lambda) {
  if (lambda.size() < 1) throw DomainError("pi_lambda: need n >= 1");
  QPoly numerator = q_pochhammer(lambda.size()).t_coefficient(0);
  QPoly denominator(1);
  for (int part : lambda.parts()) denominator *= QPoly(1) - QPoly::monomial(1, part);
  return numerator.divide_exact(denominator);
}

CheckReport pi_root_check(const Partition& lambda, int d) {
  const int n = lambda.size();
  if (d < 1 || n % d != 0) throw DomainError("pi_root_check: d must divide n");
  CheckReport r = make_report("reu", {{"lambda", lambda.to_string()}, {"d", d}});
  CycloElem value = cyclo_reduce(pi_lambda(lambda), d);
  CycloElem expected(d, lambda == rectangle(d, n / d) ? Rat(z_lambda(lambda)) : Rat(0));
  r.lhs = value.to_string();
  r.rhs = expected.to_string();
  r.passed = value == expected;
  if (!r.passed) r.first_discrepancy = "pi_lambda mod Phi_" + std::to_string(d) + ": " + r.lhs + " vs " + r.rhs;
  return r;
}

QTPoly omega_extract(const QTPoly& f, int r, int s) {
  if (r < 1) throw DomainError("omega_extract: r must be positive");
  const int target = ((s % r) + r) % r;
  QTPoly out;
  for (const auto& [e, c] : f.terms())
    if (e.first % r == target) out.add_term(0, e.second, c);
  return out;
}

SymFunc omega_extract(const SymFunc& f, int r, int s) {
  return f.map_coefficients([&](const QTPoly& c) { return omega_extract(c, r, s); });
}

QTPoly omega_root_average(const QTPoly& f, int r, int s) {
  if (r < 1) throw DomainError("omega_root_average: r must be positive");
  QTPoly out;
  for (int b = 0; b <= f.t_degree(); ++b) {
    QPoly slice = f.t_coefficient(b);
    if (slice.is_zero()) continue;
    CycloElem total(r, Rat(0));
    for (int j = 0; j < r; ++j) {
      CycloElem value(r, Rat(0));
      for (int a = 0; a <= slice.degree(); ++a)
        if (slice.coeff(a) != 0) value += CycloElem(r, slice.coeff(a)) * CycloElem::root_power(r, static_cast<long>(a) * j);
      total += CycloElem::root_power(r, -static_cast<long>(s) * j) * value;
    }
    if (!total.is_rational())
      throw InternalError("omega_root_average: t^" + std::to_string(b) + " coefficient is not rational");
    out.add_term(0, b, total.rational_value() / r);
  }
  return out;
}

SymFunc kw_generating_function(int n_total) {
  static std::mutex mu;
  static std::map<int, SymFunc> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n_total); it != memo.end()) return it->second;
  }
  if (n_total < 1) throw DomainError("kw_generating_function: need n_total >= 1");
  SymFunc out(Basis::s);
  for (const auto& lambda : partitions_of(n_total)) out.add_term(lambda, maj_neg_generating_poly(lambda));
  std::lock_guard lock(mu);
  memo.emplace(n_total, out);
  return out;
}

CheckReport kw_check(int n, int m) {
  if (n < 0 || m < 0 || n + m == 0) throw DomainError("kw_check: need (n, m) != (0, 0)");
  const int total = n + m;
  CheckReport r = make_report("kw", {{"n", n}, {"m", m}});
  SymFunc extracted = omega_extract(kw_generating_function(total), total, 1);
  std::map<Partition, QTPoly> lhs;
  for (const auto& [lambda, c] : extracted.terms()) {
    Rat v = c.coeff(0, m);
    if (v != 0) lhs[lambda] = QTPoly(v);
  }
  std::map<Partition, QTPoly> rhs = schur_expand(super_brandt_char(n, m)).coeffs;
  for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
  r.lhs = schur_string(lhs);
  r.rhs = schur_string(rhs);
  r.first_discrepancy = first_discrepancy(lhs, rhs);
  // The multiplicities must also be the super tableau counts themselves.
  for (const auto& lambda : partitions_of(total)) {
    if (!r.first_discrepancy.empty()) break;
    BigInt count = count_super_tableaux(lambda, total, 1, m);
    auto it = lhs.find(lambda);
    Rat mult = it == lhs.end() ? Rat(0) : it->second.coeff(0, 0);
    if (Rat(count) != mult)
      r.first_discrepancy = "count_super_tableaux " + lambda.to_string() + ": " + count.get_str() + " vs " + to_string(mult);
  }
  r.passed = r.first_discrepancy.empty();
  return r;
}

int half_floor(int m) { return m % 2 == 0 ? m / 2 : 0; }

std::map<int, BigInt> symmetry_counts(const Partition& lambda, int r_total, int m) {
  if (r_total < 1) throw DomainError("symmetry_counts: modulus must be positive");
  std::map<int, BigInt> out;
  for (int s = 0; s < r_total; ++s) out[s] = 0;
  const auto expanded = maj_neg_generating_poly(lambda);
  for (const auto& [e, c] : expanded.terms())
    if (e.second == m) out[e.first % r_total] += BigInt(c);
  return out;
}

namespace {

CheckReport gcd_class_check(std::string name, nlohmann::ordered_json params, const std::map<int, BigInt>& counts,
                            int modulus, int offset) {
  CheckReport r = make_report(std::move(name), std::move(params));
  r.lhs = counts_string(counts);
  std::map<long, std::pair<int, BigInt>> by_gcd;
  for (const auto& [res, count] : counts) {
    long g = std::gcd(static_cast<long>(res + offset), static_cast<long>(modulus));
    auto [it, fresh] = by_gcd.try_emplace(g, res, count);
    if (!fresh && it->second.second != count && r.first_discrepancy.empty())
      r.first_discrepancy = "residues " + std::to_string(it->second.first) + " and " + std::to_string(res) +
                            " (gcd " + std::to_string(g) + "): " + it->second.second.get_str() + " vs " +
                            count.get_str();
  }
  std::string classes = "{";
  for (const auto& [g, v] : by_gcd) {
    if (classes.size() > 1) classes += ", ";
    classes += "gcd " + std::to_string(g) + ": " + v.second.get_str();
  }
  r.rhs = classes + "}";
  r.passed = r.first_discrepancy.empty();
  return r;
}

}  // namespace

CheckReport sym1_check(const Partition& lambda) {
  const int n = lambda.size();
  return gcd_class_check("sym1", {{"lambda", lambda.to_string()}}, symmetry_counts(lambda, n, 0), n, 0);
}

CheckReport sym2_check(const Partition& lambda, int m) {
  const int total = lambda.size();
  if (m < 0 || m > total) throw DomainError("sym2_check: need 0 <= m <= |lambda|");
  return gcd_class_check("sym2", {{"lambda", lambda.to_string()}, {"m", m}}, symmetry_counts(lambda, total, m), total,
                         half_floor(m));
}

CheckReport sym3_check(const Partition& lambda, int m) {
  const int total = lambda.size();
  const int n = total - m;
  if (m < 0 || n < 0 || n % 2 == 0 || m % 2 == 0) throw DomainError("sym3_check: n and m must be odd");
  CheckReport r = make_report("sym3", {{"lambda", lambda.to_string()}, {"n", n}, {"m", m}});
  auto with_m = symmetry_counts(lambda, total, m);
  auto with_n = symmetry_counts(lambda, total, n);
  r.lhs = counts_string(with_m);
  r.rhs = counts_string(with_n);
  for (const auto& [res, count] : with_m)
    if (count != with_n.at(res)) {
      r.first_discrepancy = "residue " + std::to_string(res) + ": " + count.get_str() + " vs " + with_n.at(res).get_str();
      break;
    }
  r.passed = r.first_discrepancy.empty();
  return r;
}

std::vector<CheckReport> degree_two_checks(int d) {
  if (d < 0) throw DomainError("degree_two_checks: d must be nonnegative");
  std::vector<CheckReport> out;

  auto expansion = [](const SymFunc& f) {
    auto coeffs = schur_expand(f).coeffs;
    for (auto it = coeffs.begin(); it != coeffs.end();) it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
    return coeffs;
  };
  auto compare = [&](std::string name, const SymFunc& f, const std::function<bool(const Partition&)>& keep) {
    CheckReport r = make_report(std::move(name), {{"d", d}});
    auto lhs = expansion(f);
    std::map<Partition, QTPoly> rhs;
    for (const auto& mu : partitions_of(2 * d))
      if (keep(mu)) rhs[mu] = QTPoly(1);
    r.lhs = schur_string(lhs);
    r.rhs = schur_string(rhs);
    r.first_discrepancy = first_discrepancy(lhs, rhs);
    r.passed = r.first_discrepancy.empty();
    return r;
  };
  auto all_even = [](const Partition& mu) {
    for (int part : mu.parts())
      if (part % 2 != 0) return false;
    return true;
  };

  out.push_back(compare("degree-two-even-columns", h_pleth(d, super_brandt_char(2, 0)),
                        [&](const Partition& mu) { return all_even(conjugate(mu)); }));
  out.push_back(compare("degree-two-even-parts", h_pleth(d, super_brandt_char(0, 2)), all_even));

  CheckReport r = make_report("degree-two-convolution", {{"d", d}});
  SymFunc lhs = e_pleth(d, super_brandt_char(1, 1));
  SymFunc rhs(Basis::p);
  for (int k = 0; k <= d; ++k)
    rhs += multiply(e_pleth(k, SymFunc::h(Partition{2})), e_pleth(d - k, SymFunc::e(Partition{2})));
  auto le = expansion(lhs), re = expansion(rhs);
  r.lhs = schur_string(le);
  r.rhs = schur_string(re);
  r.first_discrepancy = first_discrepancy(le, re);
  r.passed = r.first_discrepancy.empty();
  out.push_back(r);
  return out;
}

}  // namespace superlie

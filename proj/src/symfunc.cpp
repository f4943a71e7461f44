#include "superlie/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "superlie/errors.hpp"

namespace superlie {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::m: return "m";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::p, Basis::s, Basis::h, Basis::e, Basis::m})
    if (basis_name(b) == name) return b;
  throw ParseError("unknown basis: '" + name + "'");
}

std::string compact_index(const Partition& lambda) {
  if (lambda.length() == 1 && lambda[0] < 10) return std::to_string(lambda[0]);
  bool small = std::all_of(lambda.parts().begin(), lambda.parts().end(), [](int p) { return p < 10; });
  if (!small) return "{" + lambda.to_string() + "}";
  std::string s = "{";
  for (int p : lambda.parts()) s += std::to_string(p);
  return s + "}";
}

namespace {

// Appends "coeff*mono" to os with sign handling; mono may be empty.
void render_term(std::ostringstream& os, bool first, const QTPoly& c, const std::string& mono) {
  if (c.is_constant()) {
    Rat v = c.coeff(0, 0);
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    if (mono.empty()) os << v.get_str();
    else if (v == 1) os << mono;
    else os << v.get_str() << "*" << mono;
    return;
  }
  if (!first) os << " + ";
  os << "(" << c.to_string() << ")";
  if (!mono.empty()) os << "*" << mono;
}

void add_into(std::map<Partition, QTPoly>& terms, const Partition& key, const QTPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SymFunc

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const QTPoly& coeff) {
  SymFunc f(basis);
  f.add_term(lambda, coeff);
  return f;
}

QTPoly SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QTPoly() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const QTPoly& c) { add_into(terms_, lambda, c); }

std::vector<int> SymFunc::degrees() const {
  std::set<int> ds;
  for (const auto& [lambda, c] : terms_) ds.insert(lambda.size());
  return {ds.begin(), ds.end()};
}

SymFunc SymFunc::homogeneous_part(int degree) const {
  SymFunc r(basis_);
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() == degree) r.terms_.emplace(lambda, c);
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (basis_ != o.basis_) {
    *this = to_p(*this);
    for (const auto& [lambda, c] : to_p(o).terms_) add_term(lambda, c);
    return *this;
  }
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  SymFunc neg = o;
  for (auto& [lambda, c] : neg.terms_) c = -c;
  return *this += neg;
}

SymFunc& SymFunc::operator*=(const QTPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, v] : terms_) v *= c;
  return *this;
}

std::string SymFunc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    std::string mono = lambda.empty() ? "" : basis_name(basis_) + "_" + compact_index(lambda);
    render_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Character table

CharacterTable& CharacterTable::global() {
  static CharacterTable table;
  return table;
}

namespace {

// Remove a border strip of size k from lambda, via beta numbers. Each result is
// (shape without the strip, (-1)^height).
std::vector<std::pair<Partition, int>> remove_ribbons(const Partition& lambda, int k) {
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < len; ++i) {
    int b = beta[static_cast<std::size_t>(i)];
    int nb = b - k;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int v : beta)
      if (v > nb && v < b) ++between;
    std::vector<int> nbeta = beta;
    nbeta[static_cast<std::size_t>(i)] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      int part = nbeta[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) parts.push_back(part);
    }
    out.emplace_back(Partition(std::move(parts)), between % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace

long CharacterTable::compute(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  Partition rest_mu(std::move(rest));
  long total = 0;
  for (const auto& [smaller, sign] : remove_ribbons(lambda, mu[0])) total += sign * value(smaller, rest_mu);
  return total;
}

long CharacterTable::value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("mn_character: size mismatch");
  {
    std::shared_lock lock(mu_);
    if (auto it = values_.find({lambda, mu}); it != values_.end()) return it->second;
  }
  long v = compute(lambda, mu);
  std::unique_lock lock(mu_);
  values_.emplace(std::make_pair(lambda, mu), v);
  return v;
}

void CharacterTable::warm(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) value(lambda, mu);
}

std::vector<CharacterTable::Row> CharacterTable::rows(int max_n) {
  std::vector<Row> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) out.push_back({lambda, mu, value(lambda, mu)});
  return out;
}

void CharacterTable::load(const std::vector<Row>& rows) {
  std::unique_lock lock(mu_);
  for (const auto& r : rows) values_[{r.lambda, r.mu}] = r.value;
}

void CharacterTable::clear() {
  std::unique_lock lock(mu_);
  values_.clear();
}

std::size_t CharacterTable::size() const {
  std::shared_lock lock(mu_);
  return values_.size();
}

long mn_character(const Partition& lambda, const Partition& mu) {
  return CharacterTable::global().value(lambda, mu);
}

ClassFunctionSn irreducible_character(const Partition& lambda) {
  ClassFunctionSn chi;
  chi.n = lambda.size();
  for (const auto& mu : partitions_of(chi.n)) chi.values[mu] = mn_character(lambda, mu);
  return chi;
}

// ---------------------------------------------------------------------------
// Basis transitions. Everything is routed through p.

namespace {

using RatRow = std::map<Partition, Rat>;

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
  const std::size_t k = a.size();
  std::vector<std::vector<Rat>> inv(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) throw InternalError("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = a[col][col];
    for (std::size_t j = 0; j < k; ++j) {
      a[col][j] /= f;
      inv[col][j] /= f;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat g = a[r][col];
      for (std::size_t j = 0; j < k; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

RatRow p_product(const RatRow& a, const RatRow& b) {
  RatRow out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) out[merge(la, lb)] += ca * cb;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// h_k (sign = false) or e_k (sign = true) in p.
RatRow complete_or_elementary(int k, bool sign) {
  RatRow out;
  for (const auto& mu : partitions_of(k)) {
    Rat c(1, 1);
    c /= Rat(z_lambda(mu));
    if (sign && (k - mu.length()) % 2) c = -c;
    out[mu] = c;
  }
  return out;
}

// Number of ways to distribute the parts of mu into bins of sizes lambda_1, ...:
// the coefficient of m_lambda in p_mu.
long p_to_m_coefficient(const Partition& mu, const Partition& lambda) {
  std::vector<int> remaining = lambda.parts();
  std::function<long(int)> rec = [&](int j) -> long {
    if (j == mu.length()) return 1;
    long total = 0;
    for (auto& r : remaining) {
      if (r < mu[j]) continue;
      r -= mu[j];
      total += rec(j + 1);
      r += mu[j];
    }
    return total;
  };
  return rec(0);
}

RatRow basis_to_p_direct(Basis b, const Partition& lambda) {
  switch (b) {
    case Basis::p: return {{lambda, Rat(1)}};
    case Basis::s: {
      RatRow out;
      for (const auto& mu : partitions_of(lambda.size())) {
        long chi = mn_character(lambda, mu);
        if (chi != 0) out[mu] = Rat(chi) / Rat(z_lambda(mu));
      }
      return out;
    }
    case Basis::h:
    case Basis::e: {
      RatRow out{{Partition{}, Rat(1)}};
      for (int part : lambda.parts()) out = p_product(out, complete_or_elementary(part, b == Basis::e));
      return out;
    }
    case Basis::m: break;
  }
  throw InternalError("no direct p-expansion for this basis");
}

class TransitionCache {
 public:
  static TransitionCache& global() {
    static TransitionCache cache;
    return cache;
  }

  // Expansion of the basis element b_lambda in p.
  const RatRow& to_p(Basis b, const Partition& lambda) { return table(b, lambda.size(), true).at(lambda); }
  // Expansion of p_mu in basis b.
  const RatRow& from_p(Basis b, const Partition& mu) { return table(b, mu.size(), false).at(mu); }

 private:
  using Table = std::map<Partition, RatRow>;

  const Table& table(Basis b, int n, bool to_p) {
    auto key = std::make_tuple(b, n, to_p);
    {
      std::lock_guard lock(mu_);
      if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    }
    Table t = build(b, n, to_p);
    std::lock_guard lock(mu_);
    return tables_.emplace(key, std::move(t)).first->second;
  }

  static Table build(Basis b, int n, bool to_p) {
    const auto parts = partitions_of(n);
    Table t;
    if (b == Basis::p) {
      for (const auto& l : parts) t[l] = {{l, Rat(1)}};
      return t;
    }
    if (b == Basis::s && !to_p) {
      // p_mu = sum_lambda chi^lambda(mu) s_lambda.
      for (const auto& mu : parts) {
        RatRow row;
        for (const auto& lambda : parts)
          if (long chi = mn_character(lambda, mu); chi != 0) row[lambda] = chi;
        t[mu] = std::move(row);
      }
      return t;
    }
    // Direct rows: b -> p for s, h, e; p -> m for m. The other direction inverts.
    const bool direct_is_to_p = b != Basis::m;
    Table direct;
    for (const auto& l : parts) {
      if (direct_is_to_p) {
        direct[l] = basis_to_p_direct(b, l);
      } else {
        RatRow row;
        for (const auto& lambda : parts)
          if (long c = p_to_m_coefficient(l, lambda); c != 0) row[lambda] = c;
        direct[l] = std::move(row);
      }
    }
    if (direct_is_to_p == to_p) return direct;
    const std::size_t k = parts.size();
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        auto it = direct[parts[i]].find(parts[j]);
        if (it != direct[parts[i]].end()) a[i][j] = it->second;
      }
    // Rows of A express source_i in target_j; target_j = sum_i inv[j][i] source_i.
    auto inv = invert(std::move(a));
    for (std::size_t j = 0; j < k; ++j) {
      RatRow row;
      for (std::size_t i = 0; i < k; ++i)
        if (inv[j][i] != 0) row[parts[i]] = inv[j][i];
      t[parts[j]] = std::move(row);
    }
    return t;
  }

  std::mutex mu_;
  std::map<std::tuple<Basis, int, bool>, Table> tables_;
};

}  // namespace

SymFunc to_p(const SymFunc& f) {
  if (f.basis() == Basis::p) return f;
  SymFunc out(Basis::p);
  for (const auto& [lambda, c] : f.terms())
    for (const auto& [mu, a] : TransitionCache::global().to_p(f.basis(), lambda)) out.add_term(mu, c * a);
  return out;
}

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  SymFunc pf = to_p(f);
  if (target == Basis::p) return pf;
  SymFunc out(target);
  for (const auto& [mu, c] : pf.terms())
    for (const auto& [lambda, a] : TransitionCache::global().from_p(target, mu)) out.add_term(lambda, c * a);
  return out;
}

SymFunc p_to_s(const SymFunc& f) { return to_basis(f, Basis::s); }
SymFunc s_to_p(const SymFunc& f) { return to_p(f); }

bool same_function(const SymFunc& a, const SymFunc& b) { return to_p(a) == to_p(b); }

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  SymFunc pf = to_p(f), pg = to_p(g);
  SymFunc out(Basis::p);
  for (const auto& [la, ca] : pf.terms())
    for (const auto& [lb, cb] : pg.terms()) out.add_term(merge(la, lb), ca * cb);
  return out;
}

SymFunc power(const SymFunc& f, int k) {
  SymFunc out = SymFunc::one();
  for (int i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

SymFunc frobenius_characteristic(const ClassFunctionSn& chi) {
  SymFunc out(Basis::p);
  for (const auto& mu : partitions_of(chi.n)) {
    auto it = chi.values.find(mu);
    if (it == chi.values.end()) throw DomainError("class function undefined on " + mu.to_string());
    out.add_term(mu, QTPoly(it->second / Rat(z_lambda(mu))));
  }
  return out;
}

SymFunc plethysm_p(int d, const SymFunc& f) {
  if (d < 1) throw DomainError("plethysm_p: d must be positive");
  SymFunc out(Basis::p);
  const auto expanded = to_p(f);
  for (const auto& [lambda, c] : expanded.terms()) out.add_term(scale(lambda, d), c.substitute_powers(d));
  return out;
}

namespace {

// Sum over mu |- a of sign(mu) / z_mu * prod_j pleth(mu_j). Generic in the function type.
template <typename F, typename Pleth, typename Mult>
F pleth_by_power_sums(int a, bool elementary, const F& one, Pleth pleth, Mult mult) {
  if (a < 0) throw DomainError("plethysm degree must be nonnegative");
  std::vector<F> p_of(static_cast<std::size_t>(a) + 1);
  for (int k = 1; k <= a; ++k) p_of[static_cast<std::size_t>(k)] = pleth(k);
  F out;
  for (const auto& mu : partitions_of(a)) {
    F term = one;
    for (int part : mu.parts()) term = mult(term, p_of[static_cast<std::size_t>(part)]);
    Rat c(1, 1);
    c /= Rat(z_lambda(mu));
    if (elementary && (a - mu.length()) % 2) c = -c;
    term *= QTPoly(c);
    out += term;
  }
  return out;
}

}  // namespace

SymFunc h_pleth(int a, const SymFunc& f) {
  SymFunc pf = to_p(f);
  return pleth_by_power_sums<SymFunc>(
      a, false, SymFunc::one(), [&](int k) { return plethysm_p(k, pf); }, multiply);
}

SymFunc e_pleth(int a, const SymFunc& f) {
  SymFunc pf = to_p(f);
  return pleth_by_power_sums<SymFunc>(
      a, true, SymFunc::one(), [&](int k) { return plethysm_p(k, pf); }, multiply);
}

SchurExpansion schur_expand(const SymFunc& f) {
  SchurExpansion out;
  const auto expanded = p_to_s(f);
  for (const auto& [lambda, c] : expanded.terms()) {
    for (const auto& [e, v] : c.terms())
      if (v < 0 || v.get_den() != 1) out.nonnegative_integral = false;
    out.coeffs.emplace(lambda, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BiSymFunc

BiSymFunc BiSymFunc::p(const Partition& lambda, const Partition& mu, const QTPoly& coeff) {
  BiSymFunc f;
  f.add_term(lambda, mu, coeff);
  return f;
}

BiSymFunc BiSymFunc::from_x(const SymFunc& f) {
  BiSymFunc out;
  const auto expanded = to_p(f);
  for (const auto& [lambda, c] : expanded.terms()) out.add_term(lambda, Partition{}, c);
  return out;
}

BiSymFunc BiSymFunc::from_y(const SymFunc& f) {
  BiSymFunc out;
  const auto expanded = to_p(f);
  for (const auto& [lambda, c] : expanded.terms()) out.add_term(Partition{}, lambda, c);
  return out;
}

BiSymFunc BiSymFunc::p_neg_y(int d) { return p(Partition{}, Partition{d}, QTPoly(d % 2 ? -1 : 1)); }

QTPoly BiSymFunc::coeff(const Partition& lambda, const Partition& mu) const {
  auto it = terms_.find({lambda, mu});
  return it == terms_.end() ? QTPoly() : it->second;
}

void BiSymFunc::add_term(const Partition& lambda, const Partition& mu, const QTPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{lambda, mu}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiSymFunc& BiSymFunc::operator+=(const BiSymFunc& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiSymFunc& BiSymFunc::operator-=(const BiSymFunc& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiSymFunc& BiSymFunc::operator*=(const QTPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string BiSymFunc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    if (!k.first.empty()) mono += "p_" + compact_index(k.first) + "(x)";
    if (!k.second.empty()) mono += "p_" + compact_index(k.second) + "(y)";
    render_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

BiSymFunc bi_multiply(const BiSymFunc& f, const BiSymFunc& g) {
  BiSymFunc out;
  for (const auto& [ka, ca] : f.terms())
    for (const auto& [kb, cb] : g.terms()) out.add_term(merge(ka.first, kb.first), merge(ka.second, kb.second), ca * cb);
  return out;
}

BiSymFunc bi_power(const BiSymFunc& f, int k) {
  BiSymFunc out = BiSymFunc::one();
  for (int i = 0; i < k; ++i) out = bi_multiply(out, f);
  return out;
}

BiSymFunc bi_plethysm_p(int d, const BiSymFunc& f) {
  if (d < 1) throw DomainError("bi_plethysm_p: d must be positive");
  BiSymFunc out;
  for (const auto& [k, c] : f.terms()) out.add_term(scale(k.first, d), scale(k.second, d), c.substitute_powers(d));
  return out;
}

BiSymFunc bi_h_pleth(int a, const BiSymFunc& f) {
  return pleth_by_power_sums<BiSymFunc>(
      a, false, BiSymFunc::one(), [&](int k) { return bi_plethysm_p(k, f); }, bi_multiply);
}

BiSymFunc bi_e_pleth(int a, const BiSymFunc& f) {
  return pleth_by_power_sums<BiSymFunc>(
      a, true, BiSymFunc::one(), [&](int k) { return bi_plethysm_p(k, f); }, bi_multiply);
}

SymFunc diagonal(const BiSymFunc& f) {
  SymFunc out(Basis::p);
  for (const auto& [k, c] : f.terms()) out.add_term(merge(k.first, k.second), c);
  return out;
}

// ---------------------------------------------------------------------------
// Finite-variable expansion

namespace {

Rat constant_coefficient(const QTPoly& c) {
  if (!c.is_constant()) throw DomainError("expand_truncated needs rational coefficients, got " + c.to_string());
  return c.coeff(0, 0);
}

// p_k over the variables [offset, offset + count) of a MultiPoly with n_x + n_y slots.
MultiPoly power_sum(int k, int offset, int count, int n_x, int n_y, int cap) {
  MultiPoly r(n_x, n_y, cap);
  for (int i = 0; i < count; ++i) {
    MultiPoly::Exponents e(static_cast<std::size_t>(n_x + n_y), 0);
    e[static_cast<std::size_t>(offset + i)] = k;
    r.add_term(e, 1);
  }
  return r;
}

MultiPoly power_sum_product(const Partition& lambda, int offset, int count, int n_x, int n_y, int cap,
                            std::map<int, MultiPoly>& memo) {
  MultiPoly r = MultiPoly::constant(n_x, n_y, 1, cap);
  for (int part : lambda.parts()) {
    auto it = memo.find(part);
    if (it == memo.end()) it = memo.emplace(part, power_sum(part, offset, count, n_x, n_y, cap)).first;
    r = r * it->second;
  }
  return r;
}

}  // namespace

MultiPoly expand_truncated(const SymFunc& f, int n_vars, int degree_cap) {
  if (n_vars < 0) throw DomainError("expand_truncated: negative variable count");
  MultiPoly out(n_vars, 0, degree_cap);
  std::map<int, MultiPoly> memo;
  const auto expanded = to_p(f);
  for (const auto& [lambda, c] : expanded.terms()) {
    if (lambda.size() > degree_cap) continue;
    out += power_sum_product(lambda, 0, n_vars, n_vars, 0, degree_cap, memo) * constant_coefficient(c);
  }
  return out;
}

MultiPoly bi_expand_truncated(const BiSymFunc& f, int n_x, int n_y, int degree_cap) {
  if (n_x < 0 || n_y < 0) throw DomainError("bi_expand_truncated: negative variable count");
  MultiPoly out(n_x, n_y, degree_cap);
  std::map<int, MultiPoly> memo_x, memo_y;
  for (const auto& [k, c] : f.terms()) {
    if (k.first.size() + k.second.size() > degree_cap) continue;
    MultiPoly px = power_sum_product(k.first, 0, n_x, n_x, n_y, degree_cap, memo_x);
    MultiPoly py = power_sum_product(k.second, n_x, n_y, n_x, n_y, degree_cap, memo_y);
    out += px * py * constant_coefficient(c);
  }
  return out;
}

}  // namespace superlie

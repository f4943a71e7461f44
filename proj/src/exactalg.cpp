#include "superlie/exactalg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "superlie/errors.hpp"

namespace superlie {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

BigInt binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0L)));
  return r;
}

int mobius(long d) {
  if (d < 1) throw DomainError("mobius: d must be positive");
  int sign = 1;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

long gcd_convention(long n, long m) { return std::gcd(n, m); }

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

long euler_phi(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly QPoly::monomial(const Rat& c, int exponent) {
  std::vector<Rat> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat QPoly::evaluate(const Rat& q) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("QPoly division by zero");
  std::vector<Rat> rem = coeffs_;
  const int dd = divisor.degree();
  const Rat& lead = divisor.coeffs_.back();
  std::vector<Rat> quot(rem.size() >= divisor.coeffs_.size() ? rem.size() - divisor.coeffs_.size() + 1 : 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[static_cast<std::size_t>(k)] == 0) continue;
    Rat f = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  auto [quot, rem] = divmod(divisor);
  if (!rem.is_zero())
    throw InternalError("inexact division: (" + to_string() + ") / (" + divisor.to_string() + ")");
  return quot;
}

namespace {

// "c*v^e" pieces joined with " + " / " - ".
void append_term(std::ostringstream& os, bool first, Rat c, const std::string& mono) {
  if (first) {
    if (c < 0) {
      os << "-";
      c = -c;
    }
  } else {
    os << (c < 0 ? " - " : " + ");
    if (c < 0) c = -c;
  }
  if (mono.empty()) {
    os << c.get_str();
  } else {
    if (c != 1) os << c.get_str() << "*";
    os << mono;
  }
}

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    append_term(os, first, coeffs_[k], power("q", static_cast<int>(k)));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// QTPoly

QTPoly::QTPoly(const Rat& constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

QTPoly QTPoly::monomial(const Rat& c, int q_exp, int t_exp) {
  QTPoly r;
  r.add_term(q_exp, t_exp, c);
  return r;
}

QTPoly QTPoly::from_qpoly(const QPoly& p) {
  QTPoly r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term(k, 0, p.coeff(k));
  return r;
}

bool QTPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rat QTPoly::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

int QTPoly::q_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int QTPoly::t_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

void QTPoly::add_term(int q_exp, int t_exp, const Rat& c) {
  if (c == 0) return;
  if (q_exp < 0 || t_exp < 0) throw DomainError("QTPoly exponents must be nonnegative");
  auto [it, inserted] = terms_.try_emplace(Exponent{q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly& QTPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QTPoly QTPoly::operator-() const {
  QTPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

QTPoly QTPoly::pow(int e) const {
  QTPoly result(1);
  QTPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

QTPoly QTPoly::substitute_powers(int d) const {
  QTPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.first * d, e.second * d}, c);
  return r;
}

Rat QTPoly::evaluate(const Rat& q, const Rat& t) const {
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < e.first; ++i) m *= q;
    for (int i = 0; i < e.second; ++i) m *= t;
    acc += m;
  }
  return acc;
}

QPoly QTPoly::t_coefficient(int b) const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(q_degree(), 0)) + 1);
  for (const auto& [e, c] : terms_)
    if (e.second == b) v[static_cast<std::size_t>(e.first)] = c;
  return QPoly(std::move(v));
}

QTPoly QTPoly::truncated_q(int cap) const {
  QTPoly r;
  for (const auto& [e, c] : terms_)
    if (e.first <= cap) r.terms_.emplace(e, c);
  return r;
}

QTPoly QTPoly::divide_exact(const QPoly& divisor) const {
  QTPoly r;
  for (int b = 0; b <= t_degree(); ++b) {
    QPoly slice = t_coefficient(b);
    if (slice.is_zero()) continue;
    QPoly quot = slice.divide_exact(divisor);
    for (int k = 0; k <= quot.degree(); ++k) r.add_term(k, b, quot.coeff(k));
  }
  return r;
}

std::string QTPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = power("q", e.first);
    std::string tp = power("t", e.second);
    if (!mono.empty() && !tp.empty()) mono += "*";
    mono += tp;
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

QTPoly q_int(int n) {
  QTPoly r;
  for (int k = 0; k < n; ++k) r.add_term(k, 0, 1);
  return r;
}

QTPoly q_factorial(int n) {
  QTPoly r(1);
  for (int k = 1; k <= n; ++k) r *= q_int(k);
  return r;
}

QTPoly q_pochhammer(int n) {
  QTPoly r(1);
  for (int k = 1; k <= n; ++k) r *= QTPoly(1) - QTPoly::monomial(1, k, 0);
  return r;
}

// ---------------------------------------------------------------------------
// Cyclotomic quotient rings

const QPoly& cyclotomic_poly(int d) {
  if (d < 1) throw DomainError("cyclotomic_poly: d must be positive");
  static std::mutex mu;
  static std::unordered_map<int, QPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  // q^d - 1 divided by every Phi_e with e | d, e < d.
  QPoly p = QPoly::monomial(1, d) - QPoly(1);
  for (long e : divisors(d))
    if (e < d) p = p.divide_exact(cyclotomic_poly(static_cast<int>(e)));
  std::lock_guard lock(mu);
  return memo.emplace(d, std::move(p)).first->second;
}

CycloElem::CycloElem(int modulus, const QPoly& p) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("CycloElem modulus must be positive");
  rep_ = p.divmod(cyclotomic_poly(modulus)).second;
}

CycloElem CycloElem::root_power(int modulus, long k) {
  long e = ((k % modulus) + modulus) % modulus;
  return CycloElem(modulus, QPoly::monomial(1, static_cast<int>(e)));
}

Rat CycloElem::rational_value() const {
  if (!is_rational())
    throw InternalError("cyclotomic element is not rational: " + to_string());
  return rep_.coeff(0);
}

void CycloElem::check_same_modulus(const CycloElem& o) const {
  if (modulus_ != o.modulus_) throw DomainError("CycloElem modulus mismatch");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check_same_modulus(o);
  rep_ += o.rep_;
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  check_same_modulus(o);
  rep_ -= o.rep_;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  check_same_modulus(o);
  rep_ = (rep_ * o.rep_).divmod(cyclotomic_poly(modulus_)).second;
  return *this;
}

std::string CycloElem::to_string() const {
  return rep_.to_string() + " mod Phi_" + std::to_string(modulus_);
}

CycloElem cyclo_reduce(const QPoly& p, int d) { return CycloElem(d, p); }

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(int n_x, int n_y, int degree_cap) : n_x_(n_x), n_y_(n_y), cap_(degree_cap) {
  if (n_x < 0 || n_y < 0) throw DomainError("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int n_x, int n_y, const Rat& c, int degree_cap) {
  MultiPoly r(n_x, n_y, degree_cap);
  r.add_term(Exponents(static_cast<std::size_t>(n_x + n_y), 0), c);
  return r;
}

MultiPoly MultiPoly::x(int n_x, int n_y, int i, int degree_cap) {
  if (i < 0 || i >= n_x) throw DomainError("MultiPoly::x index out of range");
  MultiPoly r(n_x, n_y, degree_cap);
  Exponents e(static_cast<std::size_t>(n_x + n_y), 0);
  e[static_cast<std::size_t>(i)] = 1;
  r.add_term(e, 1);
  return r;
}

MultiPoly MultiPoly::y(int n_x, int n_y, int j, int degree_cap) {
  if (j < 0 || j >= n_y) throw DomainError("MultiPoly::y index out of range");
  MultiPoly r(n_x, n_y, degree_cap);
  Exponents e(static_cast<std::size_t>(n_x + n_y), 0);
  e[static_cast<std::size_t>(n_x + j)] = 1;
  r.add_term(e, 1);
  return r;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != static_cast<std::size_t>(n_x_ + n_y_))
    throw DomainError("MultiPoly exponent vector has wrong length");
  if (c == 0) return;
  long total = 0;
  for (int v : e) total += v;
  if (total > cap_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::homogeneous_slice(int degree) const {
  MultiPoly r(n_x_, n_y_, cap_);
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int v : e) total += v;
    if (total == degree) r.terms_.emplace(e, c);
  }
  return r;
}

Rat MultiPoly::evaluate(std::span<const Rat> values) const {
  if (values.size() != static_cast<std::size_t>(n_x_ + n_y_))
    throw DomainError("MultiPoly::evaluate: wrong number of values");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= values[i];
    acc += m;
  }
  return acc;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (n_x_ != o.n_x_ || n_y_ != o.n_y_) throw DomainError("MultiPoly variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.n_x_, a.n_y_, std::min(a.cap_, b.cap_));
  MultiPoly::Exponents e(static_cast<std::size_t>(a.n_x_ + a.n_y_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return n_x_ == o.n_x_ && n_y_ == o.n_y_ && terms_ == o.terms_;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads more naturally (x1^2 before x1*x2).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      bool is_x = static_cast<int>(i) < n_x_;
      std::string var = (is_x ? "x" : "y") + std::to_string(is_x ? i + 1 : i + 1 - static_cast<std::size_t>(n_x_));
      if (!mono.empty()) mono += "*";
      mono += power(var.c_str(), it->first[i]);
    }
    append_term(os, first, it->second, mono);
    first = false;
  }
  return os.str();
}

}  // namespace superlie

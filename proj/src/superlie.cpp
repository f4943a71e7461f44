#include "superlie/superlie.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "superlie/errors.hpp"

namespace superlie {

SupportMatrix::SupportMatrix(std::map<Cell, int> entries) {
  for (const auto& [cell, a] : entries) {
    if (cell.first < 0 || cell.second < 0) throw DomainError("SupportMatrix indices must be nonnegative");
    if (a < 0) throw DomainError("SupportMatrix entries must be nonnegative");
    if (a == 0) continue;
    if (cell == Cell{0, 0}) throw DomainError("SupportMatrix must have a_{0,0} = 0");
    entries_.emplace(cell, a);
  }
}

int SupportMatrix::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::pair<int, int> SupportMatrix::bidegree() const {
  int n = 0, m = 0;
  for (const auto& [cell, a] : entries_) {
    n += cell.first * a;
    m += cell.second * a;
  }
  return {n, m};
}

std::string SupportMatrix::to_json_string() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [cell, a] : entries_) arr.push_back({cell.first, cell.second, a});
  return arr.dump();
}

SupportMatrix SupportMatrix::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("matrix JSON must be a list of [i, j, a] triples");
  std::map<Cell, int> entries;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number_integer())
      throw ParseError("matrix JSON must be a list of [i, j, a] triples");
    Cell cell{t[0].get<int>(), t[1].get<int>()};
    if (entries.count(cell)) throw ParseError("duplicate matrix cell");
    entries[cell] = t[2].get<int>();
  }
  try {
    return SupportMatrix(std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

void check_bidegree(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("bidegree must be nonnegative");
  if (n == 0 && m == 0) throw DomainError("bidegree (0,0) has no Lie component");
}

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

SymFunc super_brandt_char(int n, int m) {
  check_bidegree(n, m);
  const int total = n + m;
  SymFunc out(Basis::p);
  for (long d : divisors(std::gcd(n, m))) {
    int mu = mobius(d);
    if (mu == 0) continue;
    Rat c(binom(total / d, m / d));
    c *= sign_pow(m + m / d) * mu;
    c /= total;
    out.add_term(rectangle(static_cast<int>(d), static_cast<int>(total / d)), QTPoly(c));
  }
  return out;
}

BiSymFunc super_bi_brandt_char(int n, int m) {
  check_bidegree(n, m);
  const int total = n + m;
  BiSymFunc out;
  for (long d : divisors(std::gcd(n, m))) {
    int mu = mobius(d);
    if (mu == 0) continue;
    const int di = static_cast<int>(d);
    BiSymFunc px = BiSymFunc::p(rectangle(di, n / di), Partition{});
    BiSymFunc term = bi_multiply(px, bi_power(BiSymFunc::p_neg_y(di), m / di));
    Rat c(binom(total / d, m / d));
    c *= sign_pow(m / d) * mu;
    c /= total;
    out += term * QTPoly(c);
  }
  return out;
}

BigInt super_witt_dim(int n, int m, long n_dim) {
  check_bidegree(n, m);
  if (n_dim < 0) throw DomainError("super_witt_dim: N must be nonnegative");
  const long total = n + m;
  BigInt sum = 0;
  for (long d : divisors(std::gcd(n, m))) {
    int mu = mobius(d);
    if (mu == 0) continue;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n_dim), static_cast<unsigned long>(total / d));
    sum += sign_pow(m + m / d) * mu * binom(total / d, m / d) * pw;
  }
  if (sum % total != 0) throw InternalError("super_witt_dim: non-integral result");
  return sum / total;
}

std::map<std::pair<int, int>, BiSymFunc> petrogradsky_series(int max_n, int max_m) {
  if (max_n < 0 || max_m < 0) throw DomainError("petrogradsky_series: caps must be nonnegative");
  using Series = std::map<std::pair<int, int>, BiSymFunc>;
  auto series_mul = [&](const Series& a, const Series& b) {
    Series out;
    for (const auto& [da, fa] : a)
      for (const auto& [db, fb] : b) {
        std::pair<int, int> deg{da.first + db.first, da.second + db.second};
        if (deg.first > max_n || deg.second > max_m) continue;
        BiSymFunc prod = bi_multiply(fa, fb);
        if (!prod.is_zero()) out[deg] += prod;
      }
    return out;
  };

  Series total;
  const int max_d = std::max(max_n, max_m);
  for (int d = 1; d <= max_d; ++d) {
    int mu = mobius(d);
    if (mu == 0) continue;
    // u = q^d p_d(x) - t^d p_d(-y)
    Series u;
    if (d <= max_n) u[{d, 0}] = BiSymFunc::p(Partition{d}, Partition{});
    if (d <= max_m) u[{0, d}] = BiSymFunc::p_neg_y(d) * QTPoly(-1);
    // -log(1 - u) = sum_s u^s / s
    Series u_pow = u;
    for (int s = 1; !u_pow.empty(); ++s) {
      for (const auto& [deg, f] : u_pow) total[deg] += f * QTPoly(Rat(mu) / (d * s));
      u_pow = series_mul(u_pow, u);
    }
  }
  for (auto it = total.begin(); it != total.end();) it = it->second.is_zero() ? total.erase(it) : std::next(it);
  return total;
}

BiSymFunc gamma_char(int j, int a, const BiSymFunc& f) {
  if (j < 0 || a < 0) throw DomainError("gamma_char: j and a must be nonnegative");
  return j % 2 == 0 ? bi_h_pleth(a, f) : bi_e_pleth(a, f);
}

BiSymFunc super_lie_module_char(const SupportMatrix& a) {
  BiSymFunc out = BiSymFunc::one();
  for (const auto& [cell, mult] : a.entries())
    out = bi_multiply(out, gamma_char(cell.second, mult, super_bi_brandt_char(cell.first, cell.second)));
  return out;
}

std::vector<SupportMatrix> enumerate_bidegree_matrices(int n, int m) {
  check_bidegree(n, m);
  std::vector<SupportMatrix::Cell> cells;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      if (i || j) cells.emplace_back(i, j);
  std::vector<SupportMatrix> out;
  std::map<SupportMatrix::Cell, int> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int rn, int rm) {
    if (rn == 0 && rm == 0) {
      out.emplace_back(cur);
      return;
    }
    if (idx == cells.size()) return;
    auto [i, j] = cells[idx];
    for (int a = 0; a * i <= rn && a * j <= rm; ++a) {
      if (a) cur[cells[idx]] = a;
      rec(idx + 1, rn - a * i, rm - a * j);
    }
    cur.erase(cells[idx]);
  };
  rec(0, n, m);
  std::sort(out.begin(), out.end(), [](const SupportMatrix& x, const SupportMatrix& y) {
    return x.entries() < y.entries();
  });
  return out;
}

std::string bi_schur_string(const BiSymFunc& f) {
  std::map<std::pair<Partition, Partition>, QTPoly> terms;
  for (const auto& [k, c] : f.terms()) {
    SymFunc sx = p_to_s(SymFunc::p(k.first));
    SymFunc sy = p_to_s(SymFunc::p(k.second));
    for (const auto& [a, ca] : sx.terms())
      for (const auto& [b, cb] : sy.terms()) {
        terms[{a, b}] += c * ca * cb;
      }
  }
  std::string s;
  for (const auto& [k, c] : terms) {
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string coeff;
    if (!c.is_constant())
      coeff = "(" + c.to_string() + ")*";
    else if (c.coeff(0, 0) != 1)
      coeff = to_string(c.coeff(0, 0)) + "*";
    s += coeff + "s_" + compact_index(k.first) + "(x)s_" + compact_index(k.second) + "(y)";
  }
  return s.empty() ? "0" : s;
}

namespace {

std::string first_bi_discrepancy(const BiSymFunc& a, const BiSymFunc& b) {
  std::set<BiSymFunc::Key> keys;
  for (const auto& [k, c] : a.terms()) keys.insert(k);
  for (const auto& [k, c] : b.terms()) keys.insert(k);
  for (const auto& k : keys) {
    QTPoly ca = a.coeff(k.first, k.second), cb = b.coeff(k.first, k.second);
    if (!(ca == cb))
      return "p_" + compact_index(k.first) + "(x)p_" + compact_index(k.second) + "(y): " + ca.to_string() +
             " vs " + cb.to_string();
  }
  return "";
}

}  // namespace

CheckReport thrall_sum_check(int n, int m) {
  CheckReport r;
  r.check = "thrall";
  r.parameters = {{"n", n}, {"m", m}};
  BiSymFunc lhs;
  for (const auto& a : enumerate_bidegree_matrices(n, m)) lhs += super_lie_module_char(a);
  BiSymFunc rhs = BiSymFunc::p(rectangle(1, n), rectangle(1, m), QTPoly(Rat(binom(n + m, m))));
  r.passed = lhs == rhs;
  if (r.passed) {
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
  } else {
    r.lhs = bi_schur_string(lhs);
    r.rhs = bi_schur_string(rhs);
    r.first_discrepancy = first_bi_discrepancy(lhs, rhs);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Brute-force bracket rank

namespace {

// Tensors of a fixed length over an alphabet of size k, words encoded base k.
using Word = std::uint64_t;
using Tensor = std::map<Word, Rat>;

// Concatenation uv, where shift = base^len(v).
Tensor concat(const Tensor& u, const Tensor& v, Word shift) {
  Tensor out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v) out[wu * shift + wv] += cu * cv;
  return out;
}

// Incremental row echelon form keyed by leading (largest) word.
class Echelon {
 public:
  // Returns true if v was independent of the vectors added so far.
  bool add(Tensor v) {
    while (true) {
      for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
      if (v.empty()) return false;
      auto lead = std::prev(v.end());
      auto piv = pivots_.find(lead->first);
      if (piv == pivots_.end()) {
        Rat inv = 1 / lead->second;
        for (auto& [w, c] : v) c *= inv;
        Word key = lead->first;
        basis_.push_back(v);
        pivots_.emplace(key, basis_.size() - 1);
        return true;
      }
      Rat c = lead->second;
      for (const auto& [w, pc] : basis_[piv->second]) v[w] -= c * pc;
    }
  }
  const std::vector<Tensor>& basis() const { return basis_; }

 private:
  std::vector<Tensor> basis_;
  std::map<Word, std::size_t> pivots_;
};

}  // namespace

long brute_force_lie_dim(int n, int m, int n_dim, int m_dim) {
  check_bidegree(n, m);
  if (n + m > kBruteForceMaxDegree || n_dim > kBruteForceMaxDim || m_dim > kBruteForceMaxDim)
    throw ResourceError("brute_force_lie_dim caps: n+m <= 6, N, M <= 3");
  if (n_dim < 0 || m_dim < 0) throw DomainError("brute_force_lie_dim: negative dimension");
  const Word base = static_cast<Word>(n_dim + m_dim);
  std::vector<Word> base_pow(static_cast<std::size_t>(n + m) + 1, 1);
  for (std::size_t k = 1; k < base_pow.size(); ++k) base_pow[k] = base_pow[k - 1] * base;

  // span[a][b] spans L_{a,b}: even letters 0..N-1, odd letters N..N+M-1.
  std::vector<std::vector<std::vector<Tensor>>> span(
      static_cast<std::size_t>(n) + 1, std::vector<std::vector<Tensor>>(static_cast<std::size_t>(m) + 1));
  for (int i = 0; i < n_dim && n >= 1; ++i) span[1][0].push_back({{static_cast<Word>(i), Rat(1)}});
  for (int j = 0; j < m_dim && m >= 1; ++j) span[0][1].push_back({{static_cast<Word>(n_dim + j), Rat(1)}});

  for (int total = 2; total <= n + m; ++total) {
    for (int a = 0; a <= n; ++a) {
      int b = total - a;
      if (b < 0 || b > m) continue;
      Echelon ech;
      for (int a1 = 0; a1 <= a; ++a1)
        for (int b1 = 0; b1 <= b; ++b1) {
          int a2 = a - a1, b2 = b - b1;
          if (a1 + b1 == 0 || a2 + b2 == 0) continue;
          const int len_u = a1 + b1, len_v = a2 + b2;
          // [u, v] = uv - (-1)^{|u||v|} vu
          const int sign = (b1 % 2 == 1 && b2 % 2 == 1) ? -1 : 1;
          for (const auto& u : span[static_cast<std::size_t>(a1)][static_cast<std::size_t>(b1)])
            for (const auto& v : span[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b2)]) {
              Tensor uv = concat(u, v, base_pow[static_cast<std::size_t>(len_v)]);
              Tensor vu = concat(v, u, base_pow[static_cast<std::size_t>(len_u)]);
              for (const auto& [w, c] : vu) uv[w] -= sign * c;
              ech.add(std::move(uv));
            }
        }
      span[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ech.basis();
    }
  }
  return static_cast<long>(span[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)].size());
}

}  // namespace superlie

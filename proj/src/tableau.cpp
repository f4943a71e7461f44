#include "superlie/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "superlie/errors.hpp"

namespace superlie {

Subset::Subset(std::initializer_list<int> elements) {
  for (int i : elements) insert(i);
}

Subset Subset::range(int lo, int hi) {
  Subset s;
  for (int i = std::max(lo, 1); i <= hi; ++i) s.insert(i);
  return s;
}

void Subset::insert(int i) {
  if (i < 1 || i > kMaxElement) throw DomainError("Subset element out of range: " + std::to_string(i));
  bits_ |= std::uint64_t{1} << i;
}

void Subset::erase(int i) {
  if (i >= 1 && i <= kMaxElement) bits_ &= ~(std::uint64_t{1} << i);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxElement; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  shape_ = Partition(parts);
  const int n = shape_.size();
  if (n > Subset::kMaxElement) throw DomainError("tableau too large");
  row_of_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > n || row_of_[static_cast<std::size_t>(v)] != 0)
        throw DomainError("tableau entries must be a permutation of 1..n");
      row_of_[static_cast<std::size_t>(v)] = static_cast<int>(r) + 1;
      if (c > 0 && rows_[r][c - 1] >= v) throw DomainError("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw DomainError("tableau columns must increase");
    }
  }
}

std::string StandardTableau::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += "/";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(rows_[r][c]);
    }
  }
  return s;
}

SuperTableau::SuperTableau(StandardTableau p, Subset s) : plus(std::move(p)), neg(s) {
  if (s.bits() >> (plus.size() + 1)) throw DomainError("negated entries must lie in [n]");
}

std::string SuperTableau::to_string() const {
  std::string s;
  const auto& rows = plus.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += "/";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ",";
      if (neg.contains(rows[r][c])) s += "-";
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

SuperTableau SuperTableau::parse(std::string_view text) {
  auto fail = [&] { return ParseError("bad tableau: '" + std::string(text) + "'"); };
  std::vector<std::vector<int>> rows(1);
  Subset negs;
  std::string tok;
  auto flush = [&] {
    bool negative = !tok.empty() && tok[0] == '-';
    std::string digits = negative ? tok.substr(1) : tok;
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw fail();
    int v = std::stoi(digits);
    if (v < 1 || v > Subset::kMaxElement) throw fail();
    rows.back().push_back(v);
    if (negative) negs.insert(v);
    tok.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else if (ch == '/') {
      flush();
      rows.emplace_back();
    } else {
      tok += ch;
    }
  }
  if (text.empty()) return SuperTableau(StandardTableau({}), Subset{});
  flush();
  try {
    return SuperTableau(StandardTableau(std::move(rows)), negs);
  } catch (const DomainError&) {
    throw fail();
  }
}

// ---------------------------------------------------------------------------

std::vector<StandardTableau> syt_enumerate(const Partition& lambda) {
  const int n = lambda.size();
  if (n > Subset::kMaxElement) throw ResourceError("syt_enumerate: shape too large");
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  // Place 1, 2, ..., n in turn at an outer corner of the growing shape.
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      auto len = rows[static_cast<std::size_t>(r)].size();
      if (static_cast<int>(len) >= lambda[r]) continue;
      if (r > 0 && rows[static_cast<std::size_t>(r - 1)].size() <= len) continue;
      rows[static_cast<std::size_t>(r)].push_back(next);
      rec(next + 1);
      rows[static_cast<std::size_t>(r)].pop_back();
    }
  };
  rec(1);
  return out;
}

BigInt hook_length_count(const Partition& lambda) {
  BigInt prod = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda[r - 1]; ++c) prod *= hook_length(lambda, r, c);
  return factorial(lambda.size()) / prod;
}

Subset descent_set(const StandardTableau& t) {
  Subset d;
  for (int i = 1; i < t.size(); ++i)
    if (t.row_of(i + 1) > t.row_of(i)) d.insert(i);
  return d;
}

int maj(const StandardTableau& t) { return relative_maj(descent_set(t), Subset{}, t.size()); }
int comaj(const StandardTableau& t) { return relative_comaj(descent_set(t), Subset{}, t.size()); }

Subset relative_descent_set(Subset descents, Subset negs, int n) {
  Subset out;
  for (int i = 1; i <= n - 1; ++i) {
    bool in_d = descents.contains(i);
    if ((in_d && !negs.contains(i + 1)) || (!in_d && negs.contains(i))) out.insert(i);
  }
  return out;
}

int relative_maj(Subset descents, Subset negs, int n) {
  int total = 0;
  for (int i : relative_descent_set(descents, negs, n).elements()) total += i;
  return total;
}

int relative_comaj(Subset descents, Subset negs, int n) {
  int total = 0;
  for (int i : relative_descent_set(descents, negs, n).elements()) total += n - i;
  return total;
}

Subset super_descent_set(const SuperTableau& t) {
  return relative_descent_set(descent_set(t.plus), t.neg, t.size());
}

Subset super_descent_set_by_rows(const SuperTableau& t) {
  Subset out;
  for (int i = 1; i < t.size(); ++i) {
    bool lower = t.plus.row_of(i + 1) > t.plus.row_of(i);
    if ((!t.neg.contains(i + 1) && lower) || (t.neg.contains(i) && !lower)) out.insert(i);
  }
  return out;
}

int super_maj(const SuperTableau& t) { return relative_maj(descent_set(t.plus), t.neg, t.size()); }
int super_comaj(const SuperTableau& t) { return relative_comaj(descent_set(t.plus), t.neg, t.size()); }
int negg(const SuperTableau& t) { return t.neg.size(); }

namespace {

void check_budget(const Partition& lambda, std::uint64_t budget) {
  if (lambda.size() > 40) throw ResourceError("super tableau enumeration: shape too large");
  BigInt pairs = hook_length_count(lambda) * (BigInt(1) << static_cast<unsigned>(lambda.size()));
  if (pairs > BigInt(std::to_string(budget)))
    throw ResourceError("super tableau enumeration of " + lambda.to_string() + " needs " + pairs.get_str() +
                        " (T, S) pairs; budget is " + std::to_string(budget));
}

// Calls fn(descents, negs) for every (T, S) in SYT(lambda) x 2^[n].
template <typename Fn>
void for_each_super_tableau(const Partition& lambda, std::uint64_t budget, Fn&& fn) {
  check_budget(lambda, budget);
  const int n = lambda.size();
  for (const auto& t : syt_enumerate(lambda)) {
    Subset d = descent_set(t);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) fn(d, Subset(s << 1));
  }
}

}  // namespace

QTPoly maj_neg_generating_poly(const Partition& lambda, std::uint64_t budget) {
  const int n = lambda.size();
  std::map<std::pair<int, int>, long> counts;
  for_each_super_tableau(lambda, budget, [&](Subset d, Subset s) { ++counts[{relative_maj(d, s, n), s.size()}]; });
  QTPoly out;
  for (const auto& [e, c] : counts) out.add_term(e.first, e.second, c);
  return out;
}

QTPoly comaj_neg_generating_poly(const Partition& lambda, std::uint64_t budget) {
  const int n = lambda.size();
  std::map<std::pair<int, int>, long> counts;
  for_each_super_tableau(lambda, budget, [&](Subset d, Subset s) { ++counts[{relative_comaj(d, s, n), s.size()}]; });
  QTPoly out;
  for (const auto& [e, c] : counts) out.add_term(e.first, e.second, c);
  return out;
}

QTPoly maj_generating_poly(const Partition& lambda) {
  QTPoly out;
  for (const auto& t : syt_enumerate(lambda)) out.add_term(maj(t), 0, 1);
  return out;
}

BigInt count_super_tableaux(const Partition& lambda, int modulus, int residue, int neg_count,
                            std::uint64_t budget) {
  if (modulus < 1) throw DomainError("count_super_tableaux: modulus must be positive");
  const int n = lambda.size();
  const int target = ((residue % modulus) + modulus) % modulus;
  long count = 0;
  for_each_super_tableau(lambda, budget, [&](Subset d, Subset s) {
    if (s.size() == neg_count && relative_maj(d, s, n) % modulus == target) ++count;
  });
  return count;
}

}  // namespace superlie

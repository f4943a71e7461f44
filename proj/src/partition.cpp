#include "superlie/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "superlie/errors.hpp"

namespace superlie {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&] { return ParseError("bad partition: '" + std::string(text) + "'"); };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw fail();
  s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!s.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), ::isdigit)) throw fail();
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError&) {
    throw fail();
  }
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = size_ <=> o.size_; c != 0) return c;
  // Reverse lexicographic: larger leading parts come first.
  return std::lexicographical_compare_three_way(o.parts_.begin(), o.parts_.end(), parts_.begin(),
                                                parts_.end());
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (!lambda.empty()) {
    cols.assign(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
      for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

bool contains_cell(const Partition& lambda, int r, int c) {
  return r >= 1 && r <= lambda.length() && c >= 1 && c <= lambda[r - 1];
}

int hook_length(const Partition& lambda, int r, int c) {
  if (!contains_cell(lambda, r, c))
    throw DomainError("cell (" + std::to_string(r) + "," + std::to_string(c) + ") not in " + lambda.to_string());
  int arm = lambda[r - 1] - c;
  int leg = 0;
  while (r + leg < lambda.length() && lambda[r + leg] >= c) ++leg;
  return arm + leg + 1;
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    long a = static_cast<long>(j - i);
    BigInt ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(p[i]), static_cast<unsigned long>(a));
    z *= ipow * factorial(a);
    i = j;
  }
  return z;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition scale(const Partition& lambda, int d) {
  std::vector<int> parts = lambda.parts();
  for (int& p : parts) p *= d;
  return Partition(std::move(parts));
}

Partition rectangle(int d, int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), d)); }

}  // namespace superlie

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/exactalg.hpp"
#include "superlie/partition.hpp"

namespace superlie {

// Subset of {1, ..., 63} stored as a bitmask (bit i <-> element i).
class Subset {
 public:
  static constexpr int kMaxElement = 63;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> elements);
  static Subset range(int lo, int hi);  // {lo, ..., hi}

  bool contains(int i) const { return i >= 1 && i <= kMaxElement && ((bits_ >> i) & 1U); }
  void insert(int i);
  void erase(int i);
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<int> elements() const;
  std::string to_string() const;  // "{1,4,6}"

  bool operator==(const Subset&) const = default;
  auto operator<=>(const Subset&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

class StandardTableau {
 public:
  // Rows of entries, longest row on top. Throws DomainError unless the filling is a
  // bijection onto [n] increasing along rows and columns.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // 1-indexed row containing entry i.
  int row_of(int entry) const { return row_of_[static_cast<std::size_t>(entry)]; }
  std::string to_string() const;  // "1,3,4,6/2,5/7"

  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
};

// A standard super tableau, stored as its projection and its set of barred entries.
struct SuperTableau {
  StandardTableau plus;
  Subset neg;

  SuperTableau(StandardTableau p, Subset s);
  int size() const { return plus.size(); }
  // "1,-3,4,6/-2,5/-7"
  std::string to_string() const;
  static SuperTableau parse(std::string_view text);  // throws ParseError
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 20'000'000;

std::vector<StandardTableau> syt_enumerate(const Partition& lambda);
// n! / prod of hook lengths.
BigInt hook_length_count(const Partition& lambda);

Subset descent_set(const StandardTableau& t);
int maj(const StandardTableau& t);
int comaj(const StandardTableau& t);

int relative_maj(Subset descents, Subset negs, int n);
int relative_comaj(Subset descents, Subset negs, int n);
// Positions i in [n-1] counted by the relative statistics above.
Subset relative_descent_set(Subset descents, Subset negs, int n);

Subset super_descent_set(const SuperTableau& t);
// The same set via the row-comparison wording ("i+1 not negative and strictly lower,
// or i negative and not strictly lower"). Kept separate so tests can confirm the two
// wordings agree.
Subset super_descent_set_by_rows(const SuperTableau& t);
int super_maj(const SuperTableau& t);
int super_comaj(const SuperTableau& t);
int negg(const SuperTableau& t);

// Sum over SYT_+-(lambda) of q^maj t^negg (resp. q^comaj t^negg), by enumeration.
// Throws ResourceError if 2^n |SYT(lambda)| exceeds budget.
QTPoly maj_neg_generating_poly(const Partition& lambda, std::uint64_t budget = kDefaultEnumerationBudget);
QTPoly comaj_neg_generating_poly(const Partition& lambda, std::uint64_t budget = kDefaultEnumerationBudget);
// Classical sum over SYT(lambda) of q^maj.
QTPoly maj_generating_poly(const Partition& lambda);

// |{T in SYT_+-(lambda) : maj(T) = residue mod modulus, negg(T) = neg_count}|.
BigInt count_super_tableaux(const Partition& lambda, int modulus, int residue, int neg_count,
                            std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace superlie

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/exactalg.hpp"

namespace superlie {

// Integer partition: weakly decreasing positive parts. The empty partition is the
// unique partition of 0.
//
// Ordering is by size first, then reverse lexicographic within a size, so
// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1) and every ordered container keyed by
// partitions lists them in the same order partitions_of() generates them.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws DomainError if invalid
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int multiplicity(int part) const;

  // "(4,2,1)"; "()" for the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);  // throws ParseError

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
Partition conjugate(const Partition& lambda);
// 1-indexed (row, column), English notation.
int hook_length(const Partition& lambda, int r, int c);
bool contains_cell(const Partition& lambda, int r, int c);
BigInt z_lambda(const Partition& lambda);
// Multiset union of parts.
Partition merge(const Partition& a, const Partition& b);
// Every part multiplied by d.
Partition scale(const Partition& lambda, int d);
// (d, d, ..., d) with k parts.
Partition rectangle(int d, int k);

}  // namespace superlie

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "superlie/errors.hpp"
#include "superlie/partition.hpp"

using namespace superlie;

namespace {

// Euler's pentagonal recurrence.
std::vector<long> partition_numbers(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = 1;; ++j) {
      int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      long sign = j % 2 ? 1 : -1;
      p[k] += sign * p[k - g1];
      if (g2 <= k) p[k] += sign * p[k - g2];
    }
  return p;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size());
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true, ++len;
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

}  // namespace

TEST(Partition, CountsMatchPentagonalRecurrence) {
  auto p = partition_numbers(20);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(static_cast<long>(partitions_of(n).size()), p[n]) << n;
  EXPECT_EQ(partitions_of(10).size(), 42u);
}

TEST(Partition, OrderMatchesGeneration) {
  auto ps = partitions_of(4);
  EXPECT_EQ(ps.front(), (Partition{4}));
  EXPECT_EQ(ps.back(), (Partition{1, 1, 1, 1}));
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  EXPECT_LT(Partition{5}, (Partition{1, 1, 1, 1, 1, 1}));
  for (const auto& l : ps) EXPECT_EQ(l.size(), 4);
}

TEST(Partition, ValidationAndParsing) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
  EXPECT_EQ(Partition::parse("(4,2,1)"), (Partition{4, 2, 1}));
  EXPECT_EQ(Partition::parse(" ( 3 , 3 ) "), (Partition{3, 3}));
  EXPECT_EQ(Partition::parse("()"), Partition{});
  EXPECT_EQ((Partition{10, 2}).to_string(), "(10,2)");
  EXPECT_THROW(Partition::parse("(1,2"), ParseError);
  EXPECT_THROW(Partition::parse("(1,2)"), ParseError);
}

TEST(Partition, ConjugateAndHooks) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& l : partitions_of(n)) {
      EXPECT_EQ(conjugate(conjugate(l)), l);
      // Hook of (r, c) counted cell by cell.
      for (int r = 1; r <= l.length(); ++r)
        for (int c = 1; c <= l[r - 1]; ++c) {
          int hook = 1;
          for (int cc = c + 1; cc <= l[r - 1]; ++cc) ++hook;
          for (int rr = r + 1; rr <= l.length() && l[rr - 1] >= c; ++rr) ++hook;
          EXPECT_EQ(hook_length(l, r, c), hook);
        }
    }
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_THROW(hook_length(Partition{2}, 2, 1), DomainError);
  EXPECT_TRUE(contains_cell(Partition{2, 1}, 2, 1));
  EXPECT_FALSE(contains_cell(Partition{2, 1}, 2, 2));
}

TEST(Partition, CentralizerOrderFromPermutations) {
  for (int n = 1; n <= 7; ++n) {
    std::map<Partition, long> class_sizes;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long total = 0;
    do {
      ++class_sizes[cycle_type(perm)];
      ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& l : partitions_of(n)) EXPECT_EQ(z_lambda(l) * class_sizes[l], total) << l.to_string();
  }
}

TEST(Partition, Helpers) {
  EXPECT_EQ(merge(Partition{3, 1}, Partition{2, 2}), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(scale(Partition{2, 1}, 3), (Partition{6, 3}));
  EXPECT_EQ(rectangle(2, 3), (Partition{2, 2, 2}));
  EXPECT_EQ(rectangle(4, 0), Partition{});
  EXPECT_EQ((Partition{2, 2, 1}).multiplicity(2), 2);
}

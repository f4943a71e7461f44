#pragma once

#include <string>
#include <vector>

#include "superlie/report.hpp"

namespace superlie {

// Sweep bounds. Each suite also clamps to its own documented ceiling (for example
// the Cauchy suite never goes past n = 5), so a large bound only widens suites
// that can afford it.
struct VerifyBounds {
  int max_n = 8;       // partition size for hook, reu, sps, qps, symmetry
  int max_total = 8;   // n + m for character suites
  int max_degree = 4;  // d for degree-two
  int q_cap = 12;
};

inline constexpr int kMaxVerifySize = 8;
inline constexpr int kMaxVerifyDegree = 5;
inline constexpr int kMaxVerifyQCap = 20;

VerifyBounds profile_bounds(const std::string& profile);  // "quick" or "full"; throws DomainError
void validate_bounds(const VerifyBounds& b);              // throws DomainError

const std::vector<std::string>& suite_names();  // without "all"

// Reports in deterministic order. "all" concatenates every suite in suite_names()
// order. Work is spread over up to `threads` workers.
std::vector<CheckReport> run_suite(const std::string& suite, const VerifyBounds& bounds, unsigned threads = 0);

}  // namespace superlie

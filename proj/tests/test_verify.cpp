#include <gtest/gtest.h>

#include "superlie/errors.hpp"
#include "superlie/verify.hpp"

using namespace superlie;

TEST(Verify, Profiles) {
  VerifyBounds quick = profile_bounds("quick");
  VerifyBounds full = profile_bounds("full");
  EXPECT_LE(quick.max_n, full.max_n);
  EXPECT_LE(quick.max_total, full.max_total);
  EXPECT_EQ(full.max_n, 8);
  EXPECT_EQ(full.max_total, 8);
  EXPECT_EQ(full.q_cap, 12);
  EXPECT_THROW(profile_bounds("huge"), DomainError);
}

TEST(Verify, BoundValidation) {
  EXPECT_NO_THROW(validate_bounds(VerifyBounds{}));
  EXPECT_THROW(validate_bounds(VerifyBounds{0, 8, 4, 12}), DomainError);
  EXPECT_THROW(validate_bounds(VerifyBounds{kMaxVerifySize + 1, 8, 4, 12}), DomainError);
  EXPECT_THROW(validate_bounds(VerifyBounds{8, kMaxVerifySize + 1, 4, 12}), DomainError);
  EXPECT_THROW(validate_bounds(VerifyBounds{8, 8, kMaxVerifyDegree + 1, 12}), DomainError);
  EXPECT_THROW(validate_bounds(VerifyBounds{8, 8, 4, kMaxVerifyQCap + 1}), DomainError);
}

TEST(Verify, SuiteNames) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 14u);
  EXPECT_THROW(run_suite("nonsense", VerifyBounds{}), DomainError);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  VerifyBounds b = profile_bounds("quick");
  auto one = run_suite("all", b, 1);
  auto four = run_suite("all", b, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].to_json().dump(), four[i].to_json().dump()) << i;
}

TEST(Verify, QuickProfilePasses) {
  VerifyBounds b = profile_bounds("quick");
  for (const auto& name : suite_names()) {
    auto reports = run_suite(name, b);
    EXPECT_FALSE(reports.empty()) << name;
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << name << ": " << r.to_json().dump();
  }
}

TEST(Verify, FailureReportCarriesDiscrepancy) {
  CheckReport r;
  r.check = "example";
  r.passed = false;
  r.lhs = "1";
  r.rhs = "2";
  r.first_discrepancy = "lhs 1 != rhs 2";
  auto j = r.to_json();
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("first_discrepancy"), "lhs 1 != rhs 2");
  r.passed = true;
  r.first_discrepancy.clear();
  EXPECT_FALSE(r.to_json().contains("first_discrepancy"));
}

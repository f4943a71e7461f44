#pragma once

#include <string>

#include <json.hpp>

namespace superlie {

// Outcome of one identity check. On failure first_discrepancy names the first
// place (in deterministic order) where the two sides differ.
struct CheckReport {
  std::string check;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::string first_discrepancy;

  nlohmann::ordered_json to_json() const;
};

}  // namespace superlie

#include "superlie/report.hpp"

namespace superlie {

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["parameters"] = parameters;
  j["status"] = passed ? "pass" : "fail";
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  if (!passed) j["first_discrepancy"] = first_discrepancy;
  return j;
}

}  // namespace superlie

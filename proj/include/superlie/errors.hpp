#pragma once

#include <stdexcept>
#include <string>

namespace superlie {

// Invalid arguments to a well-formed call (e.g. (n, m) = (0, 0)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Enumeration or tensor-space caps exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (partitions, tableaux, matrices).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A guaranteed mathematical property failed to hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace superlie

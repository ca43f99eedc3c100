#pragma once

#include <stdexcept>
#include <string>

namespace vcfam {

// Bad arguments to a library operation (out-of-range element, k > n, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed family text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exact search was asked to run beyond its configured universe cap.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vcfam

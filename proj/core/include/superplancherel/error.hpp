#pragma once

#include <stdexcept>
#include <string>

namespace spl {

// Malformed input: bad partition data, bad flags, inconsistent group data.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request whose exact answer would be too large to produce (enumeration
// bounds, digit budgets, Bell-number guards).
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A supercharacter theory or embedding that fails one of its axioms.
class InvalidTheory : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spl

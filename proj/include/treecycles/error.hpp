#pragma once

#include <stdexcept>
#include <string>

namespace treecycles {

// Thrown for malformed or out-of-contract input. The CLI maps it to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace treecycles

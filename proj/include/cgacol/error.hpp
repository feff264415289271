#pragma once

#include <stdexcept>
#include <string>

namespace cgacol {

// Thrown when an argument violates an operation's precondition
// (negative radius, non-finite coordinate, index outside the basis...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cgacol

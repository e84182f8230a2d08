#pragma once

#include <stdexcept>
#include <string>

namespace ratdyn {

/// A mathematical precondition was violated: excluded parameter, degenerate
/// input, division by zero. The CLI maps this to exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input (rational syntax, map descriptor). The CLI maps
/// this to exit code 2.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ratdyn

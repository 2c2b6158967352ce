#pragma once

#include <stdexcept>
#include <string>

namespace mpld {

/// Malformed or invalid input document (layout JSON, graph JSON, flags).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw ContractViolation(what);
}

} // namespace mpld

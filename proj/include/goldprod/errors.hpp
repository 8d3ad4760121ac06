#pragma once

#include <stdexcept>
#include <string>

namespace goldprod {

// Raised when two internal computation routes that must agree exactly do not
// (e.g. a divisor sum over a mobius table fails to be integral). Always a bug
// in the data handed in, never a recoverable condition.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace goldprod

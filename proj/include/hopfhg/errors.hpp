#pragma once

#include <stdexcept>
#include <string>

namespace hopfhg {

/// Raised when an input object violates one of its structural invariants.
/// The message names the violated invariant and, where known, the offending
/// element.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hopfhg

#pragma once

#include <stdexcept>
#include <string>

namespace gausssum {

// Raised when an input exceeds a configured size bound (CLI maps this to
// exit code 3, as opposed to 2 for malformed input).
class bound_error : public std::runtime_error {
  public:
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gausssum

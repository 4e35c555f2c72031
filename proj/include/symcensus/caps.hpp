#pragma once

#include <stdexcept>
#include <string>

namespace symcensus {

// Raised whenever an explicit resource budget (node counts, enumeration
// sizes, orbit caps) is exhausted; distinct from invalid input so callers can
// retry with a larger budget.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace symcensus

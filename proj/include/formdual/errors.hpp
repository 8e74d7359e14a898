#pragma once

#include <stdexcept>
#include <string>

namespace formdual {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when an operation's precondition on its data (not its shapes) is violated.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace formdual

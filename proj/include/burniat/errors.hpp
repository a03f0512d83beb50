#pragma once

#include <stdexcept>
#include <string>

namespace burniat {

// Bad input: malformed data, a precondition the caller can fix.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Something that should be impossible on valid data.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace burniat

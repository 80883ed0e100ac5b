#pragma once

#include <stdexcept>
#include <string>

namespace catalan_lab {

// Input outside an operation's mathematical domain (bad parity, non-Dyck
// path, malformed mark, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Enumeration request above the configured ceiling.
class LimitError : public std::runtime_error {
 public:
  LimitError(const std::string& what, int limit)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"),
        limit_(limit) {}

  int limit() const noexcept { return limit_; }

 private:
  int limit_;
};

}  // namespace catalan_lab

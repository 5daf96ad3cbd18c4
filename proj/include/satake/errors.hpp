#pragma once

#include <stdexcept>
#include <string>

namespace satake {

/// Raised when an invariant that the algorithms guarantee is observed to be
/// broken (a bug, or deliberately injected corruption). Callers should not
/// try to recover from it.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error("internal error: " + what) {}
};

/// Exact division was requested but the dividend is not a multiple.
class NotDivisible : public std::domain_error {
 public:
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

}  // namespace satake

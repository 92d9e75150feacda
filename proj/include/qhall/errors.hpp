#pragma once

#include <stdexcept>
#include <string>

namespace qhall {

/// Invalid input: malformed data, violated preconditions, refused requests.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant. Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class FiberCapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace qhall

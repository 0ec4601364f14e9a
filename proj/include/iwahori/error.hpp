#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iwahori {

/// A request outside the mathematical domain of an operation (bad type/rank
/// pair, even prime, non-adjoint datum where one is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search or enumeration ran past its configured bound. Carries how far it
/// got so callers can report a partial result.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InvariantViolation(msg);
}

}  // namespace iwahori

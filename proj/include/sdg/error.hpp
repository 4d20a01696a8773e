#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdg {

enum class ErrorKind { Parse, Precondition, CapExceeded, InvariantViolation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::CapExceeded, what) {}
};

// A construction produced output that fails its own certificate. Never expected;
// reported rather than patched.
struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& what) : Error(ErrorKind::InvariantViolation, what) {}
};

// Resource limits shared by the exhaustive operations.
struct Limits {
  std::size_t state_cap = 10'000'000;      // max |X| of any materialized system
  std::size_t candidate_cap = 10'000'000;  // max candidate tables in brute-force enumeration
  std::size_t cycle_cap = 1'000'000;       // max cycles listed by enumerate_cycles
};

}  // namespace sdg

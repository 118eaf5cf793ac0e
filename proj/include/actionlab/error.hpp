#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace actionlab {

enum class ErrorKind {
  // validation / precondition failures
  InvalidTable,
  InvalidSpec,
  NotASubgroup,
  NotNormal,
  ParamOutOfRange,
  NotCentral,
  IllDefined,
  NotElementaryAbelian,
  NotAbelian,
  NotPGroup,
  IndexTooLarge,
  ProfileViolation,
  UnsupportedRank,
  DegenerateRotation,
  PreconditionViolated,
  // resource caps
  ClosureLimitExceeded,
  OrderCapExceeded,
  OracleCapExceeded,
  // a search that the underlying lemma guarantees to succeed came back empty
  NoExponentFound,
};

std::string_view to_string(ErrorKind kind);

/// True for the kinds that signal a configured resource cap rather than bad input.
bool is_cap_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace actionlab

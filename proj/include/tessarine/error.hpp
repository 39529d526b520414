#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tess {

enum class ErrorKind {
  ZeroDivisor,
  DimensionMismatch,
  ClusterAmbiguity,
  NilpotentBlock,
  NotDiagonalizable,
  SingularComponent,
  PreconditionFailed,
  RetryExhausted,
  VerificationFailed,
  NoPseudoinverse,
  ZeroNorm,
  BadProfile,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure the library reports carries one of the kinds above; the CLI
// prints the kind name verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tess

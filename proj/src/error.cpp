#include "tessarine/error.hpp"

namespace tess {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ClusterAmbiguity: return "ClusterAmbiguity";
    case ErrorKind::NilpotentBlock: return "NilpotentBlock";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::SingularComponent: return "SingularComponent";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::NoPseudoinverse: return "NoPseudoinverse";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::BadProfile: return "BadProfile";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tess

#include "galring/error.hpp"

namespace galring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Context: return "context";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::DegenerateSubstitution: return "degenerate-substitution";
    case ErrorKind::HigherOrderPole: return "higher-order-pole";
    case ErrorKind::InvalidDivisor: return "invalid-divisor";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::NormalizationViolation: return "normalization-violation";
    case ErrorKind::StabilizerInvariance: return "stabilizer-invariance";
    case ErrorKind::Invariance: return "invariance";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Definition: return "definition";
    case ErrorKind::UnsupportedMode: return "unsupported-mode";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Overflow: return "overflow";
  }
  return "unknown";
}

}  // namespace galring

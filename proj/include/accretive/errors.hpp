#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace accretive {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  NotHermitian,
  NonConvergence,
  EigenvalueOnCut,
  ClusteredEigenvalues,
  Singular,
  NotAccretive,
  NotPositiveDefinite,
  QuadratureNotConverged,
  HypothesisViolated,
  CertificateMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every numerical precondition failure in the library is reported through
/// this type; `kind()` lets callers branch without parsing messages.
class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::EigenvalueOnCut: return "EigenvalueOnCut";
    case ErrorKind::ClusteredEigenvalues: return "ClusteredEigenvalues";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotAccretive: return "NotAccretive";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CertificateMismatch: return "CertificateMismatch";
  }
  return "Unknown";
}

}  // namespace accretive

#include "itercurves/error.hpp"
#include "itercurves/limits.hpp"

namespace itc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IncompleteFactorization: return "IncompleteFactorization";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Limits& default_limits() {
  static Limits limits;
  return limits;
}

}  // namespace itc

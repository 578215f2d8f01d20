#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace itc {

enum class ErrorCode {
  InvalidArgument,
  ZeroPolynomial,
  NotSquarefree,
  CapExceeded,
  IncompleteFactorization,
  HypothesisViolated,
  BadReduction,
  NotOnCurve,
  Internal,
};

std::string_view to_string(ErrorCode code);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// carries the prime so callers can filter
class BadReductionError : public MathError {
 public:
  BadReductionError(std::uint64_t p, const std::string& what)
      : MathError(ErrorCode::BadReduction, what), prime_(p) {}
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t prime_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw MathError(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace itc

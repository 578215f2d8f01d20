#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "itercurves/number.hpp"

namespace itc {

// Dense univariate polynomial over Q. coeffs_[i] is the x^i coefficient,
// trailing zeros are stripped so the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs);
  RatPoly(std::initializer_list<BigRat> coeffs);

  static RatPoly constant(const BigRat& c);
  static RatPoly x();
  static RatPoly monomial(const BigRat& c, std::size_t k);
  static RatPoly from_ints(std::initializer_list<long> coeffs);
  static RatPoly from_ints(const std::vector<BigInt>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(std::size_t i) const;
  const BigRat& lead() const;
  std::span<const BigRat> coeffs() const { return coeffs_; }

  BigRat operator()(const BigRat& x) const;
  RatPoly derivative() const;
  RatPoly compose(const RatPoly& inner) const;
  RatPoly pow(unsigned e) const;
  RatPoly reversed() const;  // x^deg p(1/x)
  RatPoly scaled_arg(const BigRat& a, const BigRat& b) const;  // p(a x + b)

  // (integer coefficient vector P, positive D) with p = P / D and D minimal
  std::pair<std::vector<BigInt>, BigInt> integerized() const;
  bool has_integer_coeffs() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const BigRat& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const BigRat& s) { return a *= s; }
  friend RatPoly operator*(const BigRat& s, RatPoly a) { return a *= s; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  // quotient and remainder; divisor nonzero
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

RatPoly compose(const RatPoly& p, const RatPoly& q);

BigRat resultant(const RatPoly& p, const RatPoly& q);
BigRat discriminant(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

// Integer polynomial helpers shared by resultant and the search kernels.
using IntPoly = std::vector<BigInt>;
BigInt resultant_int(IntPoly a, IntPoly b);
BigInt content(const IntPoly& p);

}  // namespace itc

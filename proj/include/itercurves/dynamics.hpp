#pragma once

#include <vector>

#include "itercurves/factor.hpp"
#include "itercurves/limits.hpp"
#include "itercurves/ratpoly.hpp"

namespace itc {

// f_c(x) = x^2 + c, critical point 0
class QuadraticMap {
 public:
  explicit QuadraticMap(BigRat c) : c_(std::move(c)) {}
  const BigRat& c() const { return c_; }
  BigRat critical_point() const { return BigRat(0); }
  BigRat operator()(const BigRat& x) const { return x * x + c_; }
  RatPoly polynomial() const { return RatPoly({c_, BigRat(0), BigRat(1)}); }

 private:
  BigRat c_;
};

// values[k-1] = f^k(0)
struct Orbit {
  BigRat c;
  std::vector<BigRat> values;

  const BigRat& at(unsigned k) const { return values.at(k - 1); }  // f^k(0), k >= 1
  unsigned size() const { return static_cast<unsigned>(values.size()); }
};

Orbit orbit(const BigRat& c, unsigned n, const Limits& limits = default_limits());
RatPoly iterate_poly(const BigRat& c, unsigned n, const Limits& limits = default_limits());

struct DiscRecurrence {
  int sign = 0;       // disc(f^m) = sign * Delta_{m-1}^2 * 2^(2^m) * f^m(0)
  bool holds = false;
  BigRat disc;        // disc(f^m), direct
  BigRat predicted;   // Delta_{m-1}^2 * 2^(2^m) * |f^m(0)|
};

DiscRecurrence disc_recurrence_check(const BigRat& c, unsigned m, const Limits& limits = default_limits());

// exact Laurent identity f^n(z + 1/z) = z^(2^n) + z^(-2^n) for f = x^2 - 2
bool chebyshev_identity_check(unsigned n);

struct SupportResult {
  std::vector<BigInt> primes;      // increasing
  bool complete = true;
  std::vector<BigRat> resultants;  // Res(g, f^n) for n = 1..N
};

SupportResult cycle_resultant_support(const RatPoly& g, const BigRat& c, unsigned N,
                                      const FactorBudget& budget = {},
                                      const Limits& limits = default_limits());

}  // namespace itc

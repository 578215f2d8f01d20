#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library beyond GMP scalars and RatPoly
// as a coefficient container.

#include <cstdint>
#include <vector>

#include "itercurves/number.hpp"
#include "itercurves/ratpoly.hpp"

namespace oracle {

using itc::BigInt;
using itc::BigRat;
using itc::RatPoly;

// determinant of the Sylvester matrix by Bareiss elimination
BigRat sylvester_resultant(const RatPoly& p, const RatPoly& q);

// projective count of y^2 = h(x) over F_{p^m} on the smooth model, by
// tallying all squares y^2; own field arithmetic with a brute-force modulus
std::uint64_t brute_count(const RatPoly& h, std::uint32_t p, unsigned m);

// true iff the product of target with some subset of gens is a square,
// checked with mpz_sqrtrem on numerator and denominator
bool some_subset_square(const BigRat& target, const std::vector<BigRat>& gens);
bool is_rational_square(const BigRat& v);

// Y^2 = X^3 + A1 X + B1 and Y^2 = X^3 + A2 X + B2 isomorphic over Q
bool short_weierstrass_isomorphic(const BigInt& A1, const BigInt& B1, const BigInt& A2, const BigInt& B2);

// short Weierstrass form of the monic cubic x^3 + a2 x^2 + a4 x + a6
std::pair<BigRat, BigRat> depressed(const BigRat& a2, const BigRat& a4, const BigRat& a6);

// gcd of p^(2^n) + 1 over the given primes, on the full integers
BigInt full_gcd(unsigned n, const std::vector<unsigned long>& primes);

// Laurent coefficients of (z + 1/z)^k as a map from exponent to value, via Pascal's rule
std::vector<BigInt> pascal_row(unsigned k);

}  // namespace oracle

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace itc {

using BigInt = mpz_class;
using BigRat = mpq_class;  // always kept canonical (gcd 1, den > 0)

BigRat make_rat(const BigInt& num, const BigInt& den);
// accepts "a" or "a/b", optional leading sign; throws InvalidArgument
BigRat parse_rat(std::string_view text);
BigInt parse_int(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

bool is_square(const BigInt& v);
bool is_square(const BigRat& v);
std::optional<BigRat> exact_sqrt(const BigRat& v);  // nonnegative root when it exists
BigInt isqrt(const BigInt& v);

// max(|num|, den)
BigInt height(const BigRat& v);
bool is_integer(const BigRat& v);

BigInt pow(const BigInt& base, unsigned long e);
BigRat pow(const BigRat& base, unsigned long e);

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const BigRat& v) { return sgn(v); }

}  // namespace itc

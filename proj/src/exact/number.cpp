#include "itercurves/number.hpp"

#include "itercurves/error.hpp"

namespace itc {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  require(den != 0, ErrorCode::InvalidArgument, "zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i)
    ok = (s[i] >= '0' && s[i] <= '9') || (i == 0 && s[i] == '-' && s.size() > 1);
  require(ok, ErrorCode::InvalidArgument, "not an integer: " + std::string(text));
  return BigInt(s, 10);
}

BigRat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  std::string_view dtext = text.substr(slash + 1);
  require(!dtext.empty(), ErrorCode::InvalidArgument,
          "bad denominator in " + std::string(text));
  return make_rat(num, parse_int(dtext));
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

bool is_square(const BigInt& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

bool is_square(const BigRat& v) { return is_square(v.get_num()) && is_square(v.get_den()); }

BigInt isqrt(const BigInt& v) {
  require(v >= 0, ErrorCode::InvalidArgument, "isqrt of negative");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::optional<BigRat> exact_sqrt(const BigRat& v) {
  if (!is_square(v)) return std::nullopt;
  return make_rat(isqrt(v.get_num()), isqrt(v.get_den()));
}

BigInt height(const BigRat& v) {
  BigInt a = abs(v.get_num());
  return a > v.get_den() ? a : BigInt(v.get_den());
}

bool is_integer(const BigRat& v) { return v.get_den() == 1; }

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat pow(const BigRat& base, unsigned long e) {
  return make_rat(pow(base.get_num(), e), pow(base.get_den(), e));
}

}  // namespace itc

#include <string>

#include "itercurves/error.hpp"
#include "itercurves/ffield.hpp"

namespace itc {

unsigned v2_of_power_minus_one(std::uint64_t p, unsigned t) {
  require(t < 20, ErrorCode::CapExceeded, "t too large");
  BigInt v = pow(BigInt(static_cast<unsigned long>(p)), 1ul << t) - 1;
  return static_cast<unsigned>(mpz_scan1(v.get_mpz_t(), 0));
}

Fq two_power_nonsquare(const FieldCtx& F, unsigned n) {
  const std::uint32_t r = F.p() % 8;
  require(r == 3 || r == 5, ErrorCode::HypothesisViolated,
          "p = " + std::to_string(F.p()) + " is not +-3 mod 8");
  require(n < 32 && F.degree() < (1u << n), ErrorCode::HypothesisViolated, "needs m < 2^n");
  std::uint64_t t = F.q() - 1;
  unsigned s = 0;
  while (!(t & 1)) {
    t >>= 1;
    ++s;
  }
  // odd power of a nonsquare generates the 2-Sylow subgroup
  Fq alpha = F.pow(F.nonsquare(), t);
  require(s <= n + 1, ErrorCode::Internal, "2-Sylow larger than the valuation bound allows");
  require(F.pow(alpha, std::uint64_t{1} << (n + 1)) == F.one() && F.quad_char(alpha) == -1,
          ErrorCode::Internal, "nonsquare witness failed its defining conditions");
  return alpha;
}

Fq two_power_nonsquare(unsigned n, std::uint32_t p, unsigned m) {
  auto F = make_field(p, m);
  return two_power_nonsquare(*F, n);
}

}  // namespace itc

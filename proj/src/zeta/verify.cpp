#include <algorithm>
#include <cmath>
#include <string>

#include "itercurves/error.hpp"
#include "itercurves/zeta.hpp"

namespace itc {

CharPoly chebyshev_target(unsigned n, std::uint32_t p) {
  const std::size_t deg = std::size_t{1} << n;
  std::vector<BigInt> a(deg + 1, BigInt(0));
  a[0] = 1;
  a[deg] = pow(BigInt(p), deg / 2);
  return CharPoly(std::move(a), p);
}

ChebyshevCheck verify_chebyshev(unsigned n, std::uint32_t p, const Limits& limits) {
  require(n >= 1 && n <= 6, ErrorCode::InvalidArgument, "n must be in 1..6");
  const unsigned r = p % 8;
  require(r == 3 || r == 5, ErrorCode::HypothesisViolated,
          "needs p = 3 or 5 mod 8, got p = " + std::to_string(p));
  ChebyshevCheck out;
  out.in_theorem_range = r == 5 || n >= 2;
  out.zeta = char_poly(curve_b(BigRat(-2), n, limits), p, limits);
  out.holds = out.zeta.cp == chebyshev_target(n, p);
  return out;
}

DecompositionCheck verify_decomposition(const BigRat& c, unsigned n, std::uint32_t p, const Limits& limits) {
  require(n >= 2, ErrorCode::InvalidArgument, "decomposition needs n >= 2");
  HyperCurve cn = curve_c(c, n, limits);
  check_good_reduction(cn, p);
  std::vector<HyperCurve> bs;
  for (unsigned m = 1; m < n; ++m) {
    bs.push_back(curve_b(c, m, limits));
    check_good_reduction(bs.back(), p);
  }
  CharPoly lhs = char_poly(cn, p, limits).cp;
  CharPoly rhs({BigInt(1)}, p);
  for (const auto& b : bs) rhs = rhs * char_poly(b, p, limits).cp;
  return {lhs == rhs, lhs, rhs};
}

GcdBound gcd_orbit_bound(unsigned n, std::span<const std::uint64_t> primes, std::uint64_t bit_cap) {
  require(n <= 64, ErrorCode::InvalidArgument, "n must be at most 64");
  require(!primes.empty(), ErrorCode::InvalidArgument, "need at least one prime");
  GcdBound out;
  for (std::uint64_t p : primes) {
    // bits of p^(2^n) + 1 is about 2^n log2 p
    const double bits = std::ldexp(std::log2(static_cast<double>(p)), static_cast<int>(n)) + 1;
    require(bits <= static_cast<double>(bit_cap), ErrorCode::CapExceeded,
            "operand of about " + std::to_string(bits) + " bits exceeds cap");
  }
  const BigInt e = pow(BigInt(2), n);
  auto full = [&](std::uint64_t p) -> BigInt {
    BigInt v;
    mpz_pow_ui(v.get_mpz_t(), BigInt(static_cast<unsigned long>(p)).get_mpz_t(), 1ul << n);
    return v + 1;
  };
  BigInt g = full(primes[0]);
  out.operand_bits = mpz_sizeinbase(g.get_mpz_t(), 2);
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (mpz_sizeinbase(g.get_mpz_t(), 2) > 4096) {
      BigInt v = full(primes[i]);
      out.operand_bits = std::max(out.operand_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    } else {
      // g is small: reduce p^(2^n) + 1 modulo g first
      BigInt r;
      mpz_powm(r.get_mpz_t(), BigInt(static_cast<unsigned long>(primes[i])).get_mpz_t(), e.get_mpz_t(),
               g.get_mpz_t());
      r += 1;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
    }
  }
  out.value = g;
  return out;
}

std::optional<std::uint64_t> half_density_witness(const BigInt& a, const BigInt& b, std::uint64_t bound) {
  for (std::uint64_t p = 3; p <= bound; p += 2) {
    if (p % 8 != 3 && p % 8 != 5) continue;
    if (!is_small_prime(p)) continue;
    if (mpz_fdiv_ui(a.get_mpz_t(), p) != 0) continue;
    if (mpz_fdiv_ui(BigInt(b + 2).get_mpz_t(), p) != 0) continue;
    return p;
  }
  return std::nullopt;
}

}  // namespace itc

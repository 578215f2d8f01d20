#include "itercurves/dynamics.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "itercurves/error.hpp"

namespace itc {

Orbit orbit(const BigRat& c, unsigned n, const Limits& limits) {
  require(n >= 1, ErrorCode::InvalidArgument, "orbit length must be positive");
  require(n <= limits.orbit_cap, ErrorCode::CapExceeded,
          "orbit length " + std::to_string(n) + " exceeds cap " + std::to_string(limits.orbit_cap));
  Orbit o{c, {}};
  o.values.reserve(n);
  BigRat v = c;
  o.values.push_back(v);
  for (unsigned k = 2; k <= n; ++k) {
    v = v * v + c;
    o.values.push_back(v);
  }
  return o;
}

RatPoly iterate_poly(const BigRat& c, unsigned n, const Limits& limits) {
  require(n >= 1, ErrorCode::InvalidArgument, "iterate index must be positive");
  require(n < 63 && (std::size_t{1} << n) <= limits.degree_cap, ErrorCode::CapExceeded,
          "degree 2^" + std::to_string(n) + " exceeds degree cap");
  // f^n = (f^(n-1))^2 + c
  RatPoly p = QuadraticMap(c).polynomial();
  const RatPoly cst = RatPoly::constant(c);
  for (unsigned k = 2; k <= n; ++k) p = p * p + cst;
  return p;
}

DiscRecurrence disc_recurrence_check(const BigRat& c, unsigned m, const Limits& limits) {
  require(m >= 2 && m <= limits.orbit_cap, ErrorCode::InvalidArgument, "m out of range");
  RatPoly fm = iterate_poly(c, m, limits);
  DiscRecurrence out;
  out.disc = discriminant(fm);
  require(out.disc != 0, ErrorCode::NotSquarefree, "f^" + std::to_string(m) + " is not squarefree");
  BigRat prev = discriminant(iterate_poly(c, m - 1, limits));
  BigRat fm0 = orbit(c, m, limits).at(m);
  out.predicted = prev * prev * BigRat(pow(BigInt(2), 1ul << m)) * abs(fm0);
  out.holds = abs(out.disc) == out.predicted;
  out.sign = sign(out.disc) * sign(fm0);
  return out;
}

bool chebyshev_identity_check(unsigned n) {
  require(n >= 1 && n <= 8, ErrorCode::InvalidArgument, "n must be in 1..8");
  Limits lim;
  lim.degree_cap = std::max<std::size_t>(lim.degree_cap, std::size_t{1} << n);
  RatPoly p = iterate_poly(BigRat(-2), n, lim);
  const long D = 1l << n;
  // laurent[e + D] = coefficient of z^e
  std::vector<BigInt> laurent(2 * D + 1, BigInt(0));
  for (long k = 0; k <= p.degree(); ++k) {
    const BigRat& a = p.coeff(k);
    if (a == 0) continue;
    require(a.get_den() == 1, ErrorCode::Internal, "non-integer Chebyshev coefficient");
    // (z + 1/z)^k = sum_j binom(k, j) z^(k - 2j)
    for (long j = 0; j <= k; ++j) {
      BigInt b;
      mpz_bin_uiui(b.get_mpz_t(), k, j);
      laurent[k - 2 * j + D] += a.get_num() * b;
    }
  }
  for (long e = -D; e <= D; ++e) {
    const BigInt want = (e == D || e == -D) ? BigInt(1) : BigInt(0);
    if (laurent[e + D] != want) return false;
  }
  return true;
}

SupportResult cycle_resultant_support(const RatPoly& g, const BigRat& c, unsigned N,
                                      const FactorBudget& budget, const Limits& limits) {
  require(g.degree() >= 1, ErrorCode::InvalidArgument, "g must be nonconstant");
  require(N >= 1 && N <= limits.orbit_cap, ErrorCode::CapExceeded, "N exceeds cap");
  SupportResult out;
  std::set<BigInt> primes;
  RatPoly f = QuadraticMap(c).polynomial();
  RatPoly fn = f;
  for (unsigned n = 1; n <= N; ++n) {
    if (n > 1) fn = fn * fn + RatPoly::constant(c);
    BigRat r = resultant(g, fn);
    out.resultants.push_back(r);
    if (r == 0) continue;  // shared root: no finite support to report
    for (const BigInt& part : {BigInt(r.get_num()), BigInt(r.get_den())}) {
      if (abs(part) == 1) continue;
      Factorization fac = factor_bounded(part, budget);
      if (!fac.complete) out.complete = false;
      for (const auto& [p, e] : fac.factors) primes.insert(p);
    }
  }
  out.primes.assign(primes.begin(), primes.end());
  return out;
}

}  // namespace itc

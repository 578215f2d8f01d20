#include "itercurves/factor.hpp"

#include <algorithm>
#include <map>

#include "itercurves/error.hpp"

namespace itc {

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

BigInt Factorization::value() const {
  BigInt v(sign);
  for (const auto& [p, e] : factors) v *= pow(p, e);
  for (const auto& u : unfactored) v *= u;
  return v;
}

namespace {

// Brent's variant; returns a nontrivial factor or 0 when the budget runs out.
BigInt rho(const BigInt& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  for (unsigned long c = 1; budget > 0; ++c) {
    BigInt y(2), x, q(1), g(1), ys;
    std::uint64_t r = 1, m = 128;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          BigInt d = abs(x - y);
          q = q * d % n;
        }
        budget = budget > lim ? budget - lim : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        step(ys);
        BigInt d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return BigInt(0);
}

void split(const BigInt& n, std::uint64_t& budget, std::map<BigInt, unsigned>& primes,
           std::vector<BigInt>& left) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++primes[n];
    return;
  }
  BigInt sq = isqrt(n);
  if (sq * sq == n) {
    split(sq, budget, primes, left);
    split(sq, budget, primes, left);
    return;
  }
  BigInt d = rho(n, budget);
  if (d == 0) {
    left.push_back(n);
    return;
  }
  split(d, budget, primes, left);
  split(n / d, budget, primes, left);
}

}  // namespace

Factorization factor_bounded(const BigInt& n, const FactorBudget& budget) {
  require(n != 0, ErrorCode::InvalidArgument, "factor of zero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  BigInt m = abs(n);
  std::map<BigInt, unsigned> primes;
  for (std::uint64_t p = 2; p <= budget.trial_bound; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) primes[BigInt(p)] = e;
  }
  std::uint64_t rho_budget = budget.rho_iterations;
  std::vector<BigInt> left;
  split(m, rho_budget, primes, left);
  for (auto& [p, e] : primes) out.factors.emplace_back(p, e);
  std::sort(left.begin(), left.end());
  out.unfactored = std::move(left);
  out.complete = out.unfactored.empty();
  return out;
}

}  // namespace itc

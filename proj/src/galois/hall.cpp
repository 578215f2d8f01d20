#include <algorithm>
#include <set>

#include "itercurves/error.hpp"
#include "itercurves/galois.hpp"

namespace itc {

std::vector<BigInt> hall_candidate_d(const BigRat& c, unsigned n, const FactorBudget& budget,
                                     const Limits& limits) {
  require(is_integer(c), ErrorCode::InvalidArgument, "candidate d needs integer c");
  require(n >= 1, ErrorCode::InvalidArgument, "n must be positive");
  std::set<BigInt> support{BigInt(2)};
  const unsigned half = n / 2;
  if (half >= 1) {
    Orbit o = orbit(c, half, limits);
    for (unsigned j = 1; j <= half; ++j) {
      const BigInt v = o.at(j).get_num();
      require(v != 0, ErrorCode::InvalidArgument, "orbit hits 0; support undefined");
      if (abs(v) == 1) continue;
      Factorization f = factor_bounded(v, budget);
      require(f.complete, ErrorCode::IncompleteFactorization,
              "could not factor f^" + std::to_string(j) + "(0) within budget");
      for (const auto& [p, e] : f.factors) support.insert(p);
    }
  }
  std::vector<BigInt> primes(support.begin(), support.end());
  require(primes.size() <= 20, ErrorCode::CapExceeded, "prime support too large");
  std::vector<BigInt> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << primes.size()); ++mask) {
    BigInt d(1);
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1u) d *= primes[i];
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end(), [](const BigInt& a, const BigInt& b) {
    int cmp = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    return cmp != 0 ? cmp < 0 : a > b;
  });
  return out;
}

MordellScan mordell_bound_scan(const FactorBudget& budget) {
  const BigRat c(3);
  Limits lim = default_limits();
  lim.orbit_cap = std::max(lim.orbit_cap, 14u);
  Orbit o = orbit(c, 14, lim);
  MordellScan scan;
  bool prefix = true;
  for (unsigned n = 2; n <= 14; ++n) {
    MordellRow row;
    row.n = n;
    const BigInt lhs = o.at(n - 1).get_num();
    const BigInt rhs = BigInt(26214400) * pow(o.at(n / 2 + 1).get_num(), 17) + 1;
    row.bound_holds = lhs < rhs;
    if (prefix && row.bound_holds)
      scan.max_bound_n = n;
    else
      prefix = false;
    if (n <= 13) {
      const BigRat fn = o.at(n);
      for (const BigInt& d : hall_candidate_d(c, n, budget, lim)) {
        if (auto y = exact_sqrt(fn / BigRat(d))) {
          // d squarefree forces y to be an integer
          row.witness = std::make_pair(d, BigInt(y->get_num()));
          break;
        }
      }
      row.degenerate = n == 2;  // f^0(0) = 0
      if (row.witness && !row.degenerate) scan.passing.push_back(n);
    }
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

}  // namespace itc

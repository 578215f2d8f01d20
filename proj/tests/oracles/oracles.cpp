#include "oracles/oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

std::vector<BigInt> clear_denominators(const RatPoly& p, BigInt& scale) {
  scale = 1;
  for (const auto& c : p.coeffs()) scale = lcm(scale, BigInt(c.get_den()));
  std::vector<BigInt> out;
  for (const auto& c : p.coeffs()) out.push_back(BigInt(c * BigRat(scale)));
  return out;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> M) {
  const std::size_t n = M.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && M[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(M[k], M[r]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sgn * M[n - 1][n - 1];
}

// F_{p^m} with elements as base-p digit vectors packed into an index
struct SmallField {
  std::uint32_t p;
  unsigned m;
  std::uint64_t q;
  std::vector<std::uint32_t> mod;  // monic, low to high, size m + 1

  std::vector<std::uint32_t> unpack(std::uint64_t a) const {
    std::vector<std::uint32_t> d(m);
    for (unsigned i = 0; i < m; ++i, a /= p) d[i] = a % p;
    return d;
  }
  std::uint64_t pack(const std::vector<std::uint32_t>& d) const {
    std::uint64_t a = 0;
    for (unsigned i = m; i-- > 0;) a = a * p + d[i];
    return a;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = unpack(a), y = unpack(b);
    for (unsigned i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    auto x = unpack(a), y = unpack(b);
    std::vector<std::uint64_t> r(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) r[i + j] = (r[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (unsigned k = 2 * m - 1; k >= m; --k) {
      std::uint64_t t = r[k];
      if (t == 0) continue;
      r[k] = 0;
      for (unsigned i = 0; i < m; ++i) r[k - m + i] = (r[k - m + i] + (p - mod[i]) * t) % p;
    }
    std::vector<std::uint32_t> d(m);
    for (unsigned i = 0; i < m; ++i) d[i] = static_cast<std::uint32_t>(r[i]);
    return pack(d);
  }
  std::uint64_t from_rat(const BigRat& v) const {
    BigInt n = v.get_num() % p, d = v.get_den() % p;
    if (n < 0) n += p;
    if (d == 0) throw std::runtime_error("denominator vanishes");
    BigInt inv;
    BigInt P(static_cast<unsigned long>(p));
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
    return BigInt(n * inv % P).get_ui();
  }
};

bool irreducible_brute(const std::vector<std::uint32_t>& f, std::uint32_t p, unsigned m) {
  // f irreducible iff no monic factor of degree 1..m/2; brute force division
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < d; ++i, t /= p) g[i] = t % p;
      g[d] = 1;
      std::vector<std::int64_t> r(f.begin(), f.end());
      for (int k = static_cast<int>(m); k >= static_cast<int>(d); --k) {
        std::int64_t c = ((r[k] % p) + p) % p;
        if (c == 0) continue;
        for (unsigned i = 0; i <= d; ++i) r[k - d + i] -= c * g[i];
      }
      bool zero = true;
      for (unsigned i = 0; i < d; ++i) zero = zero && ((r[i] % p) + p) % p == 0;
      if (zero) return false;
    }
  }
  return true;
}

SmallField make_small_field(std::uint32_t p, unsigned m) {
  SmallField F{p, m, 1, {}};
  for (unsigned i = 0; i < m; ++i) F.q *= p;
  if (m == 1) {
    F.mod = {0, 1};
    return F;
  }
  for (std::uint64_t idx = 0;; ++idx) {
    std::vector<std::uint32_t> f(m + 1, 0);
    std::uint64_t t = idx;
    for (unsigned i = 0; i < m; ++i, t /= p) f[i] = t % p;
    f[m] = 1;
    if (f[0] != 0 && irreducible_brute(f, p, m)) {
      F.mod = f;
      return F;
    }
  }
}

bool exact_root(const BigInt& v, unsigned long k) {
  if (v < 0) return false;
  return mpz_root(BigInt(0).get_mpz_t(), v.get_mpz_t(), k) != 0;
}

}  // namespace

BigRat sylvester_resultant(const RatPoly& p, const RatPoly& q) {
  BigInt sp, sq;
  auto a = clear_denominators(p, sp), b = clear_denominators(q, sq);
  const int m = p.degree(), n = q.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<BigInt>> M(N, std::vector<BigInt>(N, BigInt(0)));
  // rows hold coefficients from the leading term down
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = b[n - i];
  BigInt det = bareiss_det(M);
  BigRat scale = BigRat(itc::pow(sp, n)) * BigRat(itc::pow(sq, m));
  BigRat out = BigRat(det) / scale;
  out.canonicalize();
  return out;
}

std::uint64_t brute_count(const RatPoly& h, std::uint32_t p, unsigned m) {
  SmallField F = make_small_field(p, m);
  std::vector<std::uint64_t> hc;
  for (const auto& c : h.coeffs()) hc.push_back(F.from_rat(c));
  std::vector<std::uint32_t> tally(F.q, 0);
  for (std::uint64_t y = 0; y < F.q; ++y) ++tally[F.mul(y, y)];
  std::uint64_t N = 0;
  for (std::uint64_t x = 0; x < F.q; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = hc.size(); i-- > 0;) acc = F.add(F.mul(acc, x), hc[i]);
    N += tally[acc];
  }
  if (h.degree() % 2 == 1)
    N += 1;
  else
    N += tally[hc.back()] ? 2 : 0;
  return N;
}

bool is_rational_square(const BigRat& v) {
  if (v < 0) return false;
  BigInt r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), v.get_num_mpz_t());
  if (rem != 0) return false;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), v.get_den_mpz_t());
  return rem == 0;
}

bool some_subset_square(const BigRat& target, const std::vector<BigRat>& gens) {
  // grow the set of reachable products one generator at a time
  std::vector<BigRat> reach{target};
  for (const auto& g : gens) {
    const std::size_t n = reach.size();
    for (std::size_t i = 0; i < n; ++i) reach.push_back(reach[i] * g);
  }
  for (const auto& v : reach)
    if (is_rational_square(v)) return true;
  return false;
}

std::pair<BigRat, BigRat> depressed(const BigRat& a2, const BigRat& a4, const BigRat& a6) {
  // x = X - a2 / 3
  BigRat A = a4 - a2 * a2 / 3;
  BigRat B = a6 - a2 * a4 / 3 + 2 * a2 * a2 * a2 / 27;
  return {A, B};
}

bool short_weierstrass_isomorphic(const BigInt& A1, const BigInt& B1, const BigInt& A2, const BigInt& B2) {
  // (A1, B1) = (u^4 A2, u^6 B2) for rational u != 0
  if ((A1 == 0) != (A2 == 0) || (B1 == 0) != (B2 == 0)) return false;
  if (A2 == 0 && B2 == 0) return true;
  if (A2 == 0) {
    BigRat r = BigRat(B1) / BigRat(B2);
    r.canonicalize();
    return r > 0 && exact_root(r.get_num(), 6) && exact_root(r.get_den(), 6);
  }
  BigRat ra = BigRat(A1) / BigRat(A2);
  ra.canonicalize();
  if (B2 == 0) return ra > 0 && exact_root(ra.get_num(), 4) && exact_root(ra.get_den(), 4);
  BigRat rb = BigRat(B1) / BigRat(B2);
  rb.canonicalize();
  BigRat s = rb / ra;  // u^2
  s.canonicalize();
  return s * s == ra && is_rational_square(s);
}

BigInt full_gcd(unsigned n, const std::vector<unsigned long>& primes) {
  BigInt g(0);
  for (unsigned long p : primes) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, 1ul << n);
    v += 1;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

std::vector<BigInt> pascal_row(unsigned k) {
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<BigInt> next(row.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace oracle

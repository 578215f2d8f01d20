#include <utility>

#include "itercurves/error.hpp"
#include "itercurves/ratpoly.hpp"

namespace itc {

namespace {

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b, over Z
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const BigInt& lb = b.back();
  int db = deg(b);
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    BigInt la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    --e;
  }
  if (e > 0) {
    BigInt f = pow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

void divide_exact(IntPoly& p, const BigInt& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

}  // namespace

BigInt content(const IntPoly& p) {
  BigInt g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Subresultant PRS (Cohen, Algorithm 3.3.7).
BigInt resultant_int(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  require(!a.empty() && !b.empty(), ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  BigInt s(1);
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
  }
  if (deg(b) == 0) return s * pow(b[0], static_cast<unsigned long>(deg(a)));

  BigInt ca = content(a), cb = content(b);
  divide_exact(a, ca);
  divide_exact(b, cb);
  BigInt t = pow(ca, deg(b)) * pow(cb, deg(a));
  BigInt g(1), h(1);
  while (true) {
    int delta = deg(a) - deg(b);
    if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) return BigInt(0);
    BigInt div = g * pow(h, static_cast<unsigned long>(delta));
    divide_exact(r, div);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt num = pow(g, static_cast<unsigned long>(delta));
      BigInt den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (deg(b) == 0) {
      BigInt num = pow(b[0], static_cast<unsigned long>(deg(a)));
      BigInt den = pow(h, static_cast<unsigned long>(deg(a) - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * h;
    }
  }
}

BigRat resultant(const RatPoly& p, const RatPoly& q) {
  require(!p.is_zero() && !q.is_zero(), ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  auto [pp, dp] = p.integerized();
  auto [qq, dq] = q.integerized();
  BigInt num = resultant_int(std::move(pp), std::move(qq));
  BigInt den = pow(dp, static_cast<unsigned long>(q.degree())) * pow(dq, static_cast<unsigned long>(p.degree()));
  return make_rat(num, den);
}

BigRat discriminant(const RatPoly& p) {
  require(p.degree() >= 1, ErrorCode::InvalidArgument, "discriminant of constant polynomial");
  long d = p.degree();
  BigRat r = resultant(p, p.derivative()) / p.lead();
  if (((d * (d - 1)) / 2) & 1) r = -r;
  return r;
}

bool is_squarefree(const RatPoly& p) {
  if (p.degree() < 1) return !p.is_zero();
  return discriminant(p) != 0;
}

}  // namespace itc

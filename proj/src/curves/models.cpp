#include <algorithm>
#include <string>

#include "itercurves/curves.hpp"
#include "itercurves/dynamics.hpp"
#include "itercurves/error.hpp"

namespace itc {

namespace {

BigInt orbit_at(const BigInt& c, unsigned k) {
  // f^0(0) = 0
  if (k == 0) return BigInt(0);
  Limits lim = default_limits();
  lim.orbit_cap = std::max(lim.orbit_cap, k);
  return orbit(BigRat(c), k, lim).at(k).get_num();
}

void check_twist_point(const BigInt& c, const BigInt& d, unsigned n, const BigInt& y) {
  require(n >= 2, ErrorCode::InvalidArgument, "needs n >= 2");
  require(d * y * y == orbit_at(c, n), ErrorCode::HypothesisViolated,
          "d y^2 != f^" + std::to_string(n) + "(0)");
}

}  // namespace

Weierstrass weierstrass_e1_printed(const BigInt& c, const BigInt& d) {
  return {BigInt(598752) * (c * c - 3 * c) * d * d, BigInt(161243136) * (c * c * c - 18 * c * c) * d * d * d};
}

WeierstrassPoint printed_point_map(const BigInt& c, const BigInt& d, unsigned n, const BigInt& y) {
  check_twist_point(c, d, n, y);
  return {d * (orbit_at(c, n - 1) - 12 * c), 2 * y * d * d * orbit_at(c, n - 2)};
}

// d y^2 = x^3 - c x^2 + c x - c^2. With u = d x, v = d^2 y this is monic;
// X = 36^2 u - 432 c d, Y = 36^3 v removes the quadratic term over Z.
Weierstrass weierstrass_e1(const BigInt& c, const BigInt& d) {
  return {BigInt(-559872) * (c * c - 3 * c) * d * d, BigInt(-161243136) * (c * c * c + 9 * c * c) * d * d * d};
}

WeierstrassPoint e1_point_map(const BigInt& c, const BigInt& d, unsigned n, const BigInt& y) {
  check_twist_point(c, d, n, y);
  // (0, y) on C_n^(d) goes to (f^(n-1)(0), y f^(n-2)(0)) on B_1^(d)
  const BigInt xb = orbit_at(c, n - 1), yb = y * orbit_at(c, n - 2);
  WeierstrassPoint P{BigInt(432) * d * (3 * xb - c), BigInt(46656) * d * d * yb};
  require(weierstrass_e1(c, d).contains(P.X, P.Y), ErrorCode::Internal, "mapped point is off the model");
  return P;
}

WeierstrassPoint mordell_map(const BigInt& d, unsigned n, const BigInt& y) {
  const BigInt c(3);
  check_twist_point(c, d, n, y);
  WeierstrassPoint P{(orbit_at(c, n - 1) - 1) * d, d * d * y * orbit_at(c, n - 2)};
  const BigInt k = 2 * d;
  require(P.Y * P.Y == P.X * P.X * P.X - k * k * k, ErrorCode::Internal, "point is off the Mordell curve");
  return P;
}

}  // namespace itc

#include <algorithm>

#include "itercurves/error.hpp"
#include "itercurves/search.hpp"

namespace itc {

namespace {

// G of degree k with G^2 agreeing with h in the coefficients of x^(2k) .. x^k
RatPoly truncated_sqrt(const RatPoly& h, const BigInt& root_lc) {
  const int k = h.degree() / 2;
  std::vector<BigRat> G(k + 1);
  G[k] = BigRat(root_lc);
  for (int j = k - 1; j >= 0; --j) {
    BigRat acc = h.coeff(k + j);
    for (int i = j + 1; i < k; ++i) {
      int l = k + j - i;
      if (l > j && l <= k) acc -= G[i] * G[l];
    }
    G[j] = acc / (2 * G[k]);
  }
  return RatPoly(std::move(G));
}

BigInt abs_sum(const RatPoly& p, int below) {
  BigInt s(0);
  for (int i = 0; i <= std::min(p.degree(), below - 1); ++i) s += abs(p.coeff(i).get_num());
  return s;
}

}  // namespace

RungeResult runge_integer_points(const HyperCurve& curve) {
  const RatPoly& h = curve.h();
  require(h.has_integer_coeffs(), ErrorCode::HypothesisViolated, "Runge bound needs integer coefficients");
  require(h.degree() % 2 == 0, ErrorCode::HypothesisViolated, "Runge bound needs even degree");
  BigInt lc = h.lead().get_num();
  require(lc > 0 && is_square(lc), ErrorCode::HypothesisViolated, "Runge bound needs a square leading coefficient");

  RatPoly G = truncated_sqrt(h, isqrt(lc));
  auto [gi, D] = G.integerized();
  RatPoly g = RatPoly::from_ints(gi);
  RatPoly r = RatPoly::constant(BigRat(D * D)) * h - g * g;
  require(!r.is_zero(), ErrorCode::HypothesisViolated, "h is a square");
  const int k = g.degree();

  // For integer x with r(x) != 0: (Y - g)(Y + g) = r forces |g(x)| <= |r(x)|,
  // which fails once |x| > S / |g_k|.
  BigInt S = abs_sum(g, k) + abs_sum(r, r.degree() + 1);
  BigInt gk = abs(g.lead().get_num());
  BigInt x_bound = S / gk + 1;
  // zeros of r are covered by the Cauchy bound 1 + max |r_i / r_top|
  BigInt enum_bound = x_bound;
  if (r.degree() > 0) {
    BigInt mx(0);
    for (int i = 0; i < r.degree(); ++i) mx = std::max(mx, BigInt(abs(r.coeff(i).get_num())));
    BigInt top = abs(r.lead().get_num());
    enum_bound = std::max(enum_bound, BigInt(1 + (mx + top - 1) / top));
  }
  require(enum_bound <= 100000000, ErrorCode::CapExceeded, "Runge enumeration range too large");

  PointList pts;
  pts.label = curve.label();
  pts.bound_kind = "runge-complete";
  pts.bound = x_bound;
  pts.points.push_back({true, -1, {}, {}});
  pts.points.push_back({true, 1, {}, {}});
  const long B = enum_bound.get_si();
  std::vector<RatPoint> affine;
  for (long x = -B; x <= B; ++x) {
    BigRat v = h(BigRat(x));
    if (v < 0 || !is_square(v)) continue;
    BigRat y(isqrt(v.get_num()));
    affine.push_back({false, 0, BigRat(x), -y});
    if (y != 0) affine.push_back({false, 0, BigRat(x), y});
  }
  for (const auto& p : affine)
    require(abs(p.x) < x_bound || r(p.x) == 0, ErrorCode::Internal,
            "integer point outside the Runge bound");
  std::sort(affine.begin(), affine.end(), [](const RatPoint& a, const RatPoint& b) {
    BigInt ha = abs(a.x.get_num()), hb = abs(b.x.get_num());
    if (ha != hb) return ha < hb;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  pts.points.insert(pts.points.end(), affine.begin(), affine.end());
  return {std::move(pts), std::move(g), std::move(r), D, x_bound};
}

}  // namespace itc

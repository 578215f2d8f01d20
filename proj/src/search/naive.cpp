#include <algorithm>
#include <numeric>
#include <tuple>

#include "itercurves/error.hpp"
#include "itercurves/search.hpp"

namespace itc {

namespace {

struct Hit {
  long a, b;
  BigInt root;  // sqrt(D * H(a, b))
};

// h = P / D; y^2 = h(a/b) iff D * H(a, b) is a square, where H is the
// homogenization of P to the next even degree.
struct Homogenized {
  std::vector<BigInt> P;
  BigInt D;
  int deg_even;

  explicit Homogenized(const RatPoly& h) {
    auto [p, d] = h.integerized();
    P = std::move(p);
    D = d;
    deg_even = h.degree() + (h.degree() % 2);
    P.resize(deg_even + 1, BigInt(0));
  }

  void scan_numerator(long a, long H, std::vector<Hit>& out) const {
    BigInt acc, bp, t;
    std::vector<BigInt> bpow(deg_even + 1);
    for (long b = 1; b <= H; ++b) {
      if (std::gcd(a, b) != 1) continue;
      bpow[0] = 1;
      for (int i = 1; i <= deg_even; ++i) bpow[i] = bpow[i - 1] * b;
      acc = 0;
      for (int i = deg_even; i >= 0; --i) {
        acc *= a;
        t = P[i] * bpow[deg_even - i];
        acc += t;
      }
      acc *= D;
      if (is_square(acc)) out.push_back({a, b, isqrt(acc)});
    }
  }
};

bool point_less(const RatPoint& p, const RatPoint& q) {
  if (p.inf != q.inf) return p.inf;
  if (p.inf) return p.branch < q.branch;
  BigInt hp = height(p.x), hq = height(q.x);
  if (hp != hq) return hp < hq;
  if (p.x.get_num() != q.x.get_num()) return p.x.get_num() < q.x.get_num();
  if (p.x.get_den() != q.x.get_den()) return p.x.get_den() < q.x.get_den();
  return p.y < q.y;
}

PointList assemble(const HyperCurve& curve, const BigInt& H, const Homogenized& hom, std::vector<Hit>& hits) {
  PointList out;
  out.label = curve.label();
  out.bound_kind = "height";
  out.bound = H;
  unsigned inf = curve.points_at_infinity();
  if (inf == 1) out.points.push_back({true, 0, {}, {}});
  if (inf == 2) {
    out.points.push_back({true, -1, {}, {}});
    out.points.push_back({true, 1, {}, {}});
  }
  for (const Hit& h : hits) {
    BigRat x = make_rat(BigInt(h.a), BigInt(h.b));
    BigRat y = make_rat(h.root, hom.D * pow(BigInt(h.b), hom.deg_even / 2));
    require(curve.contains(x, y), ErrorCode::Internal, "search produced an off-curve point");
    out.points.push_back({false, 0, x, y});
    if (y != 0) out.points.push_back({false, 0, x, -y});
  }
  std::sort(out.points.begin(), out.points.end(), point_less);
  return out;
}

long checked_bound(const BigInt& H) {
  require(H >= 1, ErrorCode::InvalidArgument, "search height must be positive");
  require(H <= 1000000, ErrorCode::CapExceeded, "search height too large");
  return H.get_si();
}

}  // namespace

std::vector<RatPoint> PointList::affine() const {
  std::vector<RatPoint> out;
  for (const auto& p : points)
    if (!p.inf) out.push_back(p);
  return out;
}

nlohmann::json PointList::to_json() const {
  auto pts = nlohmann::json::array();
  for (const auto& p : points) {
    if (p.inf)
      pts.push_back({{"x", "inf"}, {"branch", p.branch}});
    else
      pts.push_back({{"x", to_string(p.x)}, {"y", to_string(p.y)}});
  }
  return {{"label", label},
          {"points", pts},
          {"complete_over", bound_kind == "runge-complete" ? "Z" : "search_bound"},
          {"bound", to_string(bound)}};
}

PointList naive_search_serial(const HyperCurve& curve, const BigInt& H) {
  const long B = checked_bound(H);
  Homogenized hom(curve.h());
  std::vector<Hit> hits;
  for (long a = -B; a <= B; ++a) hom.scan_numerator(a, B, hits);
  return assemble(curve, H, hom, hits);
}

PointList naive_search(const HyperCurve& curve, const BigInt& H) {
  const long B = checked_bound(H);
  Homogenized hom(curve.h());
  std::vector<std::vector<Hit>> per_a(2 * B + 1);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < 2 * B + 1; ++i) hom.scan_numerator(i - B, B, per_a[i]);
  std::vector<Hit> hits;
  for (auto& v : per_a)
    for (auto& h : v) hits.push_back(std::move(h));
  return assemble(curve, H, hom, hits);
}

}  // namespace itc

#include <algorithm>
#include <string>

#include "itercurves/curves.hpp"
#include "itercurves/dynamics.hpp"
#include "itercurves/error.hpp"
#include "itercurves/factor.hpp"
#include "itercurves/polyjson.hpp"

namespace itc {

namespace {

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = powmod(b.back(), p - 2, p);
  trim(a);
  while (a.size() >= b.size()) {
    std::uint64_t c = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (p - c) * b[j]) % p;
    trim(a);
  }
  return a;
}

// If h mod p keeps its degree and is squarefree over F_p, then h is
// squarefree over Q; this avoids huge exact discriminants.
bool squarefree_mod_some_prime(const RatPoly& h) {
  static const std::uint64_t primes[] = {2147483647ull, 2147483629ull, 2147483587ull, 1000000007ull};
  for (std::uint64_t p : primes)
    if (reduces_squarefree(h, p)) return true;
  return false;
}

std::string rat_label(const BigRat& c) { return to_string(c); }

}  // namespace

bool reduces_squarefree(const RatPoly& h, std::uint64_t p) {
  require(p > 1 && p < (std::uint64_t{1} << 32), ErrorCode::InvalidArgument, "modulus out of range");
  if (h.is_zero()) return false;
  ModPoly f;
  for (const auto& c : h.coeffs()) {
    std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (den == 0) return false;
    f.push_back(mpz_fdiv_ui(c.get_num_mpz_t(), p) * powmod(den, p - 2, p) % p);
  }
  if (f.back() == 0) return false;
  if (f.size() == 1) return true;
  ModPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * (i % p) % p);
  trim(df);
  ModPoly a = f, b = df;
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

HyperCurve::HyperCurve(RatPoly h, std::string label, CurveParams params)
    : h_(std::move(h)), label_(std::move(label)), params_(std::move(params)) {
  require(h_.degree() >= 1, ErrorCode::InvalidArgument, "curve needs a nonconstant right-hand side");
  require(squarefree_mod_some_prime(h_) || is_squarefree(h_), ErrorCode::NotSquarefree,
          "right-hand side of " + label_ + " is not squarefree");
}

unsigned HyperCurve::points_at_infinity() const {
  if (h_.degree() % 2) return 1;
  return is_square(h_.lead()) ? 2 : 0;
}

nlohmann::json HyperCurve::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  if (params_.c) params["c"] = to_string(*params_.c);
  if (params_.n) params["n"] = *params_.n;
  if (params_.sign) params["sign"] = params_.sign;
  if (params_.twist) params["twist"] = to_string(*params_.twist);
  if (params_.index) params["index"] = *params_.index;
  return {{"label", label_}, {"params", params}, {"h", itc::to_json(h_)}, {"genus", genus()}};
}

HyperCurve curve_c(const BigRat& c, unsigned n, const Limits& limits) {
  CurveParams pr;
  pr.c = c;
  pr.n = n;
  return HyperCurve(iterate_poly(c, n, limits), "C_" + std::to_string(n) + "(c=" + rat_label(c) + ")", pr);
}

HyperCurve curve_b(const BigRat& c, unsigned m, const Limits& limits) {
  CurveParams pr;
  pr.c = c;
  pr.n = m;
  std::string label = "B_" + std::to_string(m) + "(c=" + rat_label(c) + ")";
  if (c == -2) label += " = B_" + std::to_string(m) + "^+";
  return HyperCurve(RatPoly({-c, BigRat(1)}) * iterate_poly(c, m, limits), label, pr);
}

HyperCurve curve_b_sign(int sign, unsigned n, const Limits& limits) {
  require(sign == 1 || sign == -1, ErrorCode::InvalidArgument, "sign must be +1 or -1");
  CurveParams pr;
  pr.c = BigRat(-2);
  pr.n = n;
  pr.sign = sign;
  RatPoly lin({BigRat(2 * sign), BigRat(1)});
  return HyperCurve(lin * iterate_poly(BigRat(-2), n, limits),
                    "B_" + std::to_string(n) + (sign > 0 ? "^+" : "^-"), pr);
}

HyperCurve curve_frak(unsigned n, const Limits& limits) {
  require(n >= 1 && n < 63 && (std::size_t{1} << n) + 1 <= limits.degree_cap, ErrorCode::CapExceeded,
          "degree exceeds cap");
  CurveParams pr;
  pr.n = n;
  RatPoly h = RatPoly::monomial(BigRat(1), (std::size_t{1} << n) + 1) + RatPoly::x();
  return HyperCurve(h, "frakC_" + std::to_string(n), pr);
}

RatPoly orbit_poly(unsigned k) {
  require(k >= 1 && k <= 10, ErrorCode::InvalidArgument, "orbit polynomial index out of range");
  RatPoly x = RatPoly::x(), v = x;
  for (unsigned j = 2; j <= k; ++j) v = v * v + x;
  return v;
}

HyperCurve curve_f(unsigned i) {
  const RatPoly sext = RatPoly::from_ints({1, 0, 2, 3, 3, 3, 1});
  const RatPoly sept = RatPoly::from_ints({1, 1, 2, 5, 6, 6, 4, 1});
  const RatPoly cub = RatPoly::from_ints({1, 1, 2, 1});
  const RatPoly f4 = RatPoly::from_ints({0, 1, 1, 2, 5, 6, 6, 4, 1});
  const RatPoly f3 = RatPoly::from_ints({0, 1, 1, 2, 1});
  const RatPoly x = RatPoly::x();
  RatPoly h;
  switch (i) {
    case 0: h = f4; break;
    case 1: h = -sept; break;
    case 2: h = sext; break;
    case 3: h = -(x * sext); break;
    case 4: h = sept * cub; break;
    case 5: h = f4 * (-cub); break;
    case 6: h = sext * f3; break;
    case 7: h = -(sext * cub); break;
    default: fail(ErrorCode::InvalidArgument, "F_i needs 0 <= i <= 7");
  }
  CurveParams pr;
  pr.index = i;
  return HyperCurve(h, "F_" + std::to_string(i), pr);
}

HyperCurve curve_f1_prime() {
  CurveParams pr;
  pr.index = 1;
  return HyperCurve(RatPoly::from_ints({1, 21, 76, 117, 94, 42, 10, 1}), "F_1'", pr);
}

HyperCurve curve_a(const RatPoly& g, const BigRat& c, unsigned n, const Limits& limits) {
  CurveParams pr;
  pr.c = c;
  pr.n = n;
  return HyperCurve(g * iterate_poly(c, n, limits), "A_" + std::to_string(n) + "(c=" + rat_label(c) + ")", pr);
}

HyperCurve curve_custom(const RatPoly& h, const std::string& label) { return HyperCurve(h, label); }

HyperCurve twist(const HyperCurve& curve, const BigInt& d) {
  require(d != 0, ErrorCode::InvalidArgument, "twist by zero");
  if (abs(d) > 1) {
    Factorization f = factor_bounded(d);
    require(f.complete, ErrorCode::IncompleteFactorization, "cannot factor twist parameter");
    for (const auto& [p, e] : f.factors)
      require(e == 1, ErrorCode::InvalidArgument, "twist parameter " + to_string(d) + " is not squarefree");
  }
  if (d == 1) return curve;
  CurveParams pr = curve.params();
  pr.twist = pr.twist ? *pr.twist * d : d;
  return HyperCurve(curve.h() * BigRat(d), curve.label() + "^(" + to_string(d) + ")", pr);
}

std::vector<FqPoint> enumerate_points(const FieldCtx& F, const RatPoly& h) {
  auto coeffs = F.reduce(h);
  std::vector<FqPoint> out;
  for (std::uint64_t i = 0; i < F.q(); ++i) {
    Fq x = F.element(i);
    auto s = F.sqrt(F.eval(coeffs, x));
    if (!s) continue;
    out.push_back({false, x, *s});
    if (s->v) out.push_back({false, x, F.neg(*s)});
  }
  Fq lc = coeffs.empty() ? F.zero() : coeffs.back();
  if (h.degree() % 2) {
    out.push_back({true, {}, {}});
  } else if (auto s = F.sqrt(lc); s && lc != F.zero()) {
    out.push_back({true, {}, *s});
    out.push_back({true, {}, F.neg(*s)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatPoint cover_pi(const BigRat& c, unsigned n, unsigned m, const RatPoint& P, const Limits& limits) {
  require(m >= 1 && m < n, ErrorCode::InvalidArgument, "cover needs 1 <= m < n");
  const RatPoly fn = iterate_poly(c, n, limits);
  if (P.inf) return RatPoint{true, 0, {}, {}};
  require(P.y * P.y == fn(P.x), ErrorCode::NotOnCurve, "point is not on C_n");
  QuadraticMap f(c);
  BigRat x = P.x, prev = P.x;  // prev = f^(n-m-1)(x)
  for (unsigned j = 0; j < n - m; ++j) {
    prev = x;
    x = f(x);
  }
  RatPoint out{false, 0, x, P.y * prev};
  const RatPoly fm = iterate_poly(c, m, limits);
  require(out.y * out.y == (out.x - c) * fm(out.x), ErrorCode::Internal, "image not on B_m");
  return out;
}

FqPoint cover_pi(const FieldCtx& F, const BigRat& c, unsigned n, unsigned m, const FqPoint& P,
                 const Limits& limits) {
  require(m >= 1 && m < n, ErrorCode::InvalidArgument, "cover needs 1 <= m < n");
  if (P.inf) return FqPoint{true, {}, {}};
  const auto fn = F.reduce(iterate_poly(c, n, limits));
  require(F.sqr(P.y) == F.eval(fn, P.x), ErrorCode::NotOnCurve, "point is not on C_n");
  const Fq cc = F.from_rat(c);
  Fq x = P.x, prev = P.x;
  for (unsigned j = 0; j < n - m; ++j) {
    prev = x;
    x = F.add(F.sqr(x), cc);
  }
  FqPoint out{false, x, F.mul(P.y, prev)};
  const auto fm = F.reduce(iterate_poly(c, m, limits));
  require(F.sqr(out.y) == F.mul(F.sub(out.x, cc), F.eval(fm, out.x)), ErrorCode::Internal,
          "image not on B_m");
  return out;
}

}  // namespace itc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "itercurves/bijection.hpp"
#include "itercurves/ffield.hpp"
#include "itercurves/limits.hpp"
#include "itercurves/ratpoly.hpp"

namespace itc {

enum class Family { C, B, BSign, FrakC, F, F1Prime, A, Custom };

struct CurveParams {
  std::optional<BigRat> c;
  std::optional<unsigned> n;
  int sign = 0;                  // B_n^{+-}
  std::optional<BigInt> twist;   // d of d y^2 = h
  std::optional<unsigned> index; // F_i
};

// y^2 = h(x), h squarefree
class HyperCurve {
 public:
  HyperCurve(RatPoly h, std::string label, CurveParams params = {});

  const RatPoly& h() const { return h_; }
  const std::string& label() const { return label_; }
  const CurveParams& params() const { return params_; }
  unsigned genus() const { return static_cast<unsigned>((h_.degree() - 1) / 2); }
  int degree() const { return h_.degree(); }
  // rational points at infinity on the smooth model: 1, 2 or 0
  unsigned points_at_infinity() const;
  bool contains(const BigRat& x, const BigRat& y) const { return y * y == h_(x); }

  nlohmann::json to_json() const;

 private:
  RatPoly h_;
  std::string label_;
  CurveParams params_;
};

// y^2 = f_c^n(x)
HyperCurve curve_c(const BigRat& c, unsigned n, const Limits& limits = default_limits());
// y^2 = (x - c) f_c^m(x)
HyperCurve curve_b(const BigRat& c, unsigned m, const Limits& limits = default_limits());
// y^2 = (x +- 2) T_{2^n}(x); B_n^+ coincides with curve_b(-2, n)
HyperCurve curve_b_sign(int sign, unsigned n, const Limits& limits = default_limits());
// y^2 = x (x^(2^n) + 1)
HyperCurve curve_frak(unsigned n, const Limits& limits = default_limits());
// F_0 .. F_7 of the S^(4) analysis
HyperCurve curve_f(unsigned i);
HyperCurve curve_f1_prime();
// y^2 = g(x) f_c^n(x)
HyperCurve curve_a(const RatPoly& g, const BigRat& c, unsigned n, const Limits& limits = default_limits());
HyperCurve curve_custom(const RatPoly& h, const std::string& label = "custom");

// the orbit polynomials f_x^k(0) in the variable x = c
RatPoly orbit_poly(unsigned k);

HyperCurve twist(const HyperCurve& curve, const BigInt& d);

// Rational point on y^2 = h(x)
struct RatPoint {
  bool inf = false;
  int branch = 0;  // +-1 for the two points over infinity, 0 when unique
  BigRat x, y;
  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// (x, y) on C_n  ->  (f^(n-m)(x), y f^(n-m-1)(x)) on B_m
RatPoint cover_pi(const BigRat& c, unsigned n, unsigned m, const RatPoint& P,
                  const Limits& limits = default_limits());
FqPoint cover_pi(const FieldCtx& F, const BigRat& c, unsigned n, unsigned m, const FqPoint& P,
                 const Limits& limits = default_limits());

// h mod p has no vanishing denominators, keeps its degree and is squarefree
bool reduces_squarefree(const RatPoly& h, std::uint64_t p);

// all points of y^2 = h over F (affine plus infinity markers), sorted
std::vector<FqPoint> enumerate_points(const FieldCtx& F, const RatPoly& h);

// Weierstrass model Y^2 = X^3 + A X + B for d y^2 = (x - c)(x^2 + c)
struct Weierstrass {
  BigInt A, B;
  bool contains(const BigInt& X, const BigInt& Y) const { return Y * Y == X * X * X + A * X + B; }
};
struct WeierstrassPoint {
  BigInt X, Y;
};

// coefficients exactly as printed: 598752 (c^2-3c) d^2, 161243136 (c^3-18c^2) d^3
Weierstrass weierstrass_e1_printed(const BigInt& c, const BigInt& d);
WeierstrassPoint printed_point_map(const BigInt& c, const BigInt& d, unsigned n, const BigInt& y);

// model derived from the curve: -559872 (c^2-3c) d^2, -161243136 (c^3+9c^2) d^3
Weierstrass weierstrass_e1(const BigInt& c, const BigInt& d);
// image of (0, y) on C_n^(d), i.e. d y^2 = f^n(0); asserts the image lies on the model
WeierstrassPoint e1_point_map(const BigInt& c, const BigInt& d, unsigned n, const BigInt& y);

// ((f^(n-1)(0) - 1) d, d^2 y f^(n-2)(0)) on y^2 = x^3 - (2d)^3, c = 3
WeierstrassPoint mordell_map(const BigInt& d, unsigned n, const BigInt& y);

struct CmCheck {
  bool printed_on_b1_minus = false;   // displayed map on y^2 = (x-2)(x^2-2)
  bool printed_on_b1 = false;         // displayed map on y^2 = (x+2)(x^2-2)
  bool conjugate_on_b1 = false;       // x -> -x conjugate of the map on (x+2)(x^2-2)
  bool pole_at_minus_two = false;     // (-2, 0) goes to infinity under the conjugate map
  bool f11_closed = false;            // conjugate map preserves B_1(F_11)
  bool holds() const { return printed_on_b1_minus && conjugate_on_b1 && f11_closed; }
};
CmCheck cm_map_identity();

struct SeriesExpansion {
  std::vector<BigRat> coeffs;  // x^0 .. x^(K-1)
  unsigned order() const { return static_cast<unsigned>(coeffs.size()); }
};

// h^(-1/2) mod x^K for h(0) = 1
SeriesExpansion sqrt_recip_series(const RatPoly& h, unsigned K);
// term-wise antiderivative of x^i * s, with zero constant term
SeriesExpansion formal_integral(const SeriesExpansion& s, unsigned i);

}  // namespace itc

#include "itercurves/curves.hpp"

namespace itc {

namespace {

// For y^2 = h(x), X = N/D, Y = y * G / (s * E) with s^2 = -8, check
// h(x) G^2 D^3 == -8 E^2 sum h_i N^i D^(3-i).
bool identity_holds(const RatPoly& h, const RatPoly& N, const RatPoly& D, const RatPoly& G,
                    const RatPoly& E) {
  RatPoly lhs = h * G * G * D.pow(3);
  RatPoly sum;
  for (int i = 0; i <= 3; ++i) sum += RatPoly::constant(h.coeff(i)) * N.pow(i) * D.pow(3 - i);
  RatPoly rhs = RatPoly::constant(BigRat(-8)) * E * E * sum;
  return lhs == rhs;
}

}  // namespace

CmCheck cm_map_identity() {
  CmCheck out;
  const RatPoly q = RatPoly::from_ints({-2, 0, 1});  // x^2 - 2
  const RatPoly bminus = RatPoly::from_ints({-2, 1}) * q;
  const RatPoly bplus = RatPoly::from_ints({2, 1}) * q;

  // displayed: X = -1/2 (x^2-2)/(x-2) + 2, Y = y ((x-2)^2 - 2) / (-2 sqrt(-2) (x-2)^2)
  const RatPoly xm2 = RatPoly::from_ints({-2, 1});
  const RatPoly N = -q + RatPoly::constant(BigRat(4)) * xm2;
  const RatPoly D = RatPoly::constant(BigRat(2)) * xm2;
  const RatPoly G = xm2 * xm2 - RatPoly::constant(BigRat(2));
  const RatPoly E = xm2 * xm2;
  out.printed_on_b1_minus = identity_holds(bminus, N, D, G, E);
  out.printed_on_b1 = identity_holds(bplus, N, D, G, E);

  // conjugated by x -> -x: X = -1/2 (x^2-2)/(x+2) - 2, Y = y ((x+2)^2 - 2) / (-2 sqrt(-2) (x+2)^2)
  const RatPoly xp2 = RatPoly::from_ints({2, 1});
  const RatPoly Nc = -q - RatPoly::constant(BigRat(4)) * xp2;
  const RatPoly Dc = RatPoly::constant(BigRat(2)) * xp2;
  const RatPoly Gc = xp2 * xp2 - RatPoly::constant(BigRat(2));
  const RatPoly Ec = xp2 * xp2;
  out.conjugate_on_b1 = identity_holds(bplus, Nc, Dc, Gc, Ec);
  out.pole_at_minus_two = Dc(BigRat(-2)) == 0 && Nc(BigRat(-2)) != 0;

  // over F_11, -2 = 3^2
  auto F = make_field(11, 1);
  bool closed = true;
  for (int sroot : {3, 8}) {
    Fq s = F->from_int(sroot);
    for (const FqPoint& P : enumerate_points(*F, bplus)) {
      if (P.inf) continue;
      Fq d = F->eval(F->reduce(Dc), P.x);
      if (d == F->zero()) continue;  // kernel point, image at infinity
      Fq X = F->div(F->eval(F->reduce(Nc), P.x), d);
      Fq den = F->mul(F->mul(F->from_int(-2), s), F->eval(F->reduce(Ec), P.x));
      Fq Y = F->div(F->mul(P.y, F->eval(F->reduce(Gc), P.x)), den);
      if (F->sqr(Y) != F->eval(F->reduce(bplus), X)) closed = false;
    }
  }
  out.f11_closed = closed;
  return out;
}

}  // namespace itc

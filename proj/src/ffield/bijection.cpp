#include "itercurves/bijection.hpp"

#include <algorithm>
#include <string>

#include "itercurves/dynamics.hpp"
#include "itercurves/error.hpp"

namespace itc {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  BigInt r;
  BigInt A(static_cast<unsigned long>(a)), M(static_cast<unsigned long>(m));
  mpz_invert(r.get_mpz_t(), A.get_mpz_t(), M.get_mpz_t());
  return r.get_ui();
}

}  // namespace

BnBijection::BnBijection(std::uint32_t p, unsigned r, unsigned n, const Limits& limits)
    : p_(p), r_(r), n_(n) {
  require(n >= 1 && r >= 1, ErrorCode::InvalidArgument, "n and r must be positive");
  std::uint64_t pp1 = std::uint64_t{p} + 1;
  while (pp1 % 2 == 0) {
    pp1 /= 2;
    ++k_;
  }
  require(n >= k_, ErrorCode::HypothesisViolated,
          "needs n >= v2(p+1) = " + std::to_string(k_));
  base_ = make_field(p, r, limits);
  Limits lim = limits;
  lim.degree_cap = std::max<std::size_t>(lim.degree_cap, std::size_t{1} << n);
  T_ = base_->reduce(iterate_poly(BigRat(-2), n, lim));

  const std::uint64_t q = base_->q();
  twist_mode_ = q % 4 == 1;
  if (twist_mode_) {
    i_ = *base_->sqrt(base_->neg(base_->one()));
    return;
  }

  big_ = make_field(p, 2 * r, limits);
  SubfieldEmbedding emb(base_, big_);
  up_.resize(q);
  down_.assign(big_->q(), 0);
  for (std::uint64_t i = 0; i < q; ++i) {
    up_[i] = emb(base_->element(i));
    down_[up_[i].v] = static_cast<std::uint32_t>(i + 1);
  }

  // q + 1 = 2^k * odd when r is odd
  std::uint64_t N = q + 1;
  while (N % 2 == 0) {
    N /= 2;
    two_part_ *= 2;
  }
  odd_part_ = N;
  require(two_part_ == (std::uint64_t{1} << k_), ErrorCode::Internal, "unexpected 2-part of q+1");
  // exponent that kills the 2-part and fixes the odd part
  e_odd_ = odd_part_ == 1 ? 0 : (two_part_ * inverse_mod(two_part_ % odd_part_, odd_part_)) % (q + 1);

  // the 2-Sylow of F_{q^2}^* has order 2^(k+1)
  const std::uint64_t Q = big_->q() - 1;
  std::uint64_t t = Q;
  while (t % 2 == 0) t /= 2;
  zeta_ = big_->pow(big_->nonsquare(), t);
  require(big_->pow(zeta_, std::uint64_t{1} << k_) == big_->neg(big_->one()), ErrorCode::Internal,
          "zeta has the wrong order");
  Fq z2 = big_->sqr(zeta_), acc = big_->one();
  for (std::uint64_t j = 0; j < two_part_; ++j) {
    zeta_pows_.push_back(acc);
    acc = big_->mul(acc, z2);
  }
}

Fq BnBijection::up(Fq a) const { return up_.at(a.v); }

Fq BnBijection::down(Fq a) const {
  std::uint32_t v = down_.at(a.v);
  require(v != 0, ErrorCode::Internal, "value is not in the base field");
  return Fq{v - 1};
}

bool BnBijection::on_curve(int sign, const FqPoint& P) const {
  if (P.inf) return true;
  const FieldCtx& F = *base_;
  Fq rhs = F.mul(F.add(P.x, F.from_int(sign > 0 ? 2 : -2)), F.eval(T_, P.x));
  return F.sqr(P.y) == rhs;
}

std::vector<FqPoint> BnBijection::points(int sign) const {
  const FieldCtx& F = *base_;
  std::vector<FqPoint> out{FqPoint{true, {}, {}}};
  for (std::uint64_t i = 0; i < F.q(); ++i) {
    Fq x = F.element(i);
    Fq rhs = F.mul(F.add(x, F.from_int(sign > 0 ? 2 : -2)), F.eval(T_, x));
    auto s = F.sqrt(rhs);
    if (!s) continue;
    out.push_back({false, x, *s});
    if (s->v != 0) out.push_back({false, x, F.neg(*s)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Fq, Fq> BnBijection::roots(Fq a) const {
  const FieldCtx& B = *big_;
  Fq disc = B.sub(B.sqr(a), B.from_int(4));
  auto s = B.sqrt(disc);
  require(s.has_value(), ErrorCode::Internal, "base field element without square root in F_{q^2}");
  Fq half = B.inv(B.from_int(2));
  Fq w = B.mul(B.add(a, *s), half);
  Fq wi = B.mul(B.sub(a, *s), half);
  return {w, wi};
}

// Picks one element from each pair {w, 1/w} of mu_(q+1) \ {-1}: by the odd
// component's encoding when it is nontrivial, otherwise by the exponent t of
// w = zeta^(2t) lying in the lower half. The rule is built so that the
// shifted set zeta^2 * (canonical) is again a transversal away from 1.
bool BnBijection::canonical_unit(Fq w) const {
  const FieldCtx& B = *big_;
  if (odd_part_ > 1) {
    Fq wo = B.pow(w, e_odd_);
    if (wo != B.one()) return wo.v < B.inv(wo).v;
  }
  for (std::uint64_t t = 0; t < two_part_; ++t)
    if (zeta_pows_[t] == w) return t < two_part_ / 2;
  fail(ErrorCode::Internal, "element outside mu_(q+1)");
}

FqPoint BnBijection::forward(const FqPoint& P) const {
  require(on_curve(+1, P), ErrorCode::NotOnCurve, "point not on B_n^+");
  if (P.inf) return P;
  const FieldCtx& F = *base_;
  FqPoint out{false, {}, {}};
  if (twist_mode_) {
    out = {false, F.neg(P.x), F.mul(i_, P.y)};
  } else if (P.x == F.from_int(-2)) {
    out = {false, F.from_int(2), F.zero()};
  } else {
    const FieldCtx& B = *big_;
    Fq a = up(P.x), b = up(P.y);
    auto [w, wi] = roots(a);
    Fq d = F.sub(F.sqr(P.x), F.from_int(4));
    if (d != F.zero() && F.quad_char(d) == 1) {
      if (wi.v < w.v) w = wi;
      Fq lam = B.div(B.sub(w, B.one()), B.add(w, B.one()));
      out = {false, P.x, down(B.mul(lam, b))};
    } else {
      if (!canonical_unit(w)) w = wi;
      Fq z2 = B.sqr(zeta_);
      Fq u = B.mul(z2, w);
      Fq X = B.add(u, B.inv(u));
      // zeta^-(2^n + 1)
      Fq zfac = B.inv(B.mul(B.pow(zeta_, std::uint64_t{1} << n_), zeta_));
      Fq Y = B.mul(B.mul(B.div(B.sub(u, B.one()), B.add(w, B.one())), zfac), b);
      out = {false, down(X), down(Y)};
    }
  }
  require(on_curve(-1, out), ErrorCode::Internal, "image not on B_n^-");
  return out;
}

FqPoint BnBijection::backward(const FqPoint& P) const {
  require(on_curve(-1, P), ErrorCode::NotOnCurve, "point not on B_n^-");
  if (P.inf) return P;
  const FieldCtx& F = *base_;
  FqPoint out{false, {}, {}};
  if (twist_mode_) {
    out = {false, F.neg(P.x), F.mul(F.neg(i_), P.y)};
  } else if (P.x == F.from_int(2)) {
    out = {false, F.from_int(-2), F.zero()};
  } else {
    const FieldCtx& B = *big_;
    Fq X = up(P.x), Y = up(P.y);
    auto [u, ui] = roots(X);
    Fq d = F.sub(F.sqr(P.x), F.from_int(4));
    if (d != F.zero() && F.quad_char(d) == 1) {
      if (ui.v < u.v) u = ui;
      Fq lam = B.div(B.add(u, B.one()), B.sub(u, B.one()));
      out = {false, P.x, down(B.mul(lam, Y))};
    } else {
      Fq zi2 = B.inv(B.sqr(zeta_));
      Fq w = B.mul(zi2, u);
      if (!canonical_unit(w)) w = B.mul(zi2, ui);
      Fq a = B.add(w, B.inv(w));
      Fq zfac = B.mul(B.pow(zeta_, std::uint64_t{1} << n_), zeta_);
      Fq z2w = B.mul(B.sqr(zeta_), w);
      Fq b = B.mul(B.mul(B.div(B.add(w, B.one()), B.sub(z2w, B.one())), zfac), Y);
      out = {false, down(a), down(b)};
    }
  }
  require(on_curve(+1, out), ErrorCode::Internal, "image not on B_n^+");
  return out;
}

}  // namespace itc

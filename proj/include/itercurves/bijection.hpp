#pragma once

#include <compare>
#include <vector>

#include "itercurves/ffield.hpp"

namespace itc {

struct FqPoint {
  bool inf = false;
  Fq x, y;
  friend auto operator<=>(const FqPoint&, const FqPoint&) = default;
};

// Point bijections B_n^+(F_q) <-> B_n^-(F_q), B_n^{+-}: y^2 = (x +- 2) T_{2^n}(x),
// q = p^r. When q = 1 mod 4 the map is (x, y) -> (-x, i y). Otherwise the
// points are lifted to x(x^(2^(n+1)) + 1) over F_{q^2}, rotated by
// (w, y) -> (zeta^2 w, zeta y) and pushed down again.
class BnBijection {
 public:
  BnBijection(std::uint32_t p, unsigned r, unsigned n, const Limits& limits = default_limits());

  const FieldCtx& base() const { return *base_; }
  FieldPtr base_ptr() const { return base_; }
  bool twist_mode() const { return twist_mode_; }
  unsigned k() const { return k_; }

  bool on_curve(int sign, const FqPoint& P) const;
  std::vector<FqPoint> points(int sign) const;  // sorted, includes the point at infinity

  FqPoint forward(const FqPoint& P) const;   // B^+ -> B^-
  FqPoint backward(const FqPoint& P) const;  // B^- -> B^+

 private:
  Fq up(Fq a) const;
  Fq down(Fq a) const;
  bool canonical_unit(Fq w) const;  // w in mu_(q+1), big field
  std::pair<Fq, Fq> roots(Fq a_big) const;  // w, 1/w with w + 1/w = a

  std::uint32_t p_;
  unsigned r_, n_, k_ = 0;
  FieldPtr base_, big_;
  std::vector<Fq> T_;  // T_{2^n} over the base field
  bool twist_mode_ = false;
  Fq i_{0};            // sqrt(-1) in the base field (twist mode)
  Fq zeta_{0};         // order 2^(k+1) in the big field
  std::vector<Fq> zeta_pows_;
  std::uint64_t two_part_ = 1, odd_part_ = 1;
  std::uint64_t e_odd_ = 0;
  std::vector<Fq> up_;
  std::vector<std::uint32_t> down_;  // big index -> base index + 1, 0 when absent
};

}  // namespace itc

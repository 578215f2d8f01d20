#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itercurves/curves.hpp"
#include "itercurves/ffield.hpp"

namespace itc {

namespace kernels {
// sum over x in F_q of chi(h(x)); h given by reduced coefficients
std::int64_t char_sum_serial(const FieldCtx& F, std::span<const Fq> h);
std::int64_t char_sum_omp(const FieldCtx& F, std::span<const Fq> h);
}  // namespace kernels

// projective count on the smooth model; BadReduction when p divides the
// discriminant or the leading coefficient
std::uint64_t count_points(const HyperCurve& curve, std::uint32_t p, unsigned m,
                           const Limits& limits = default_limits());
std::uint64_t count_points(const HyperCurve& curve, const FieldCtx& F);
std::uint64_t count_points_serial(const HyperCurve& curve, const FieldCtx& F);

void check_good_reduction(const HyperCurve& curve, std::uint32_t p);
bool has_good_reduction(const HyperCurve& curve, std::uint32_t p);

class CharPoly {
 public:
  CharPoly() : a_{BigInt(1)}, p_(0) {}
  CharPoly(std::vector<BigInt> coeffs, std::uint32_t p);  // a_0 .. a_2g, a_0 = 1

  const std::vector<BigInt>& coeffs() const { return a_; }
  std::uint32_t p() const { return p_; }
  unsigned genus() const { return static_cast<unsigned>((a_.size() - 1) / 2); }

  // polynomial t^(2g) + a_1 t^(2g-1) + ... + a_2g
  BigInt at(const BigInt& t) const;
  bool functional_equation_holds() const;
  bool roots_on_circle(double tol = 1e-6) const;
  std::vector<BigInt> ascending() const;  // coefficients of t^0 .. t^2g
  std::string to_string() const;

  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.a_ == b.a_ && a.p_ == b.p_; }
  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);

 private:
  std::vector<BigInt> a_;
  std::uint32_t p_;
};

struct ZetaResult {
  CharPoly cp;
  std::vector<std::uint64_t> counts;  // N_1 .. N_g
  std::optional<bool> self_check;     // predicted vs counted N_(g+1)
  bool hasse_weil = true;
  bool roots_ok = true;
};

ZetaResult char_poly(const HyperCurve& curve, std::uint32_t p, const Limits& limits = default_limits());
BigInt jacobian_order(const CharPoly& cp);
bool within_hasse_weil(std::uint64_t N, std::uint64_t q, unsigned g);

// t^(2^n) + p^(2^(n-1)) for B_n, c = -2
CharPoly chebyshev_target(unsigned n, std::uint32_t p);

struct ChebyshevCheck {
  bool holds = false;
  bool in_theorem_range = false;
  ZetaResult zeta;
};
// HypothesisViolated for p = +-1 mod 8
ChebyshevCheck verify_chebyshev(unsigned n, std::uint32_t p, const Limits& limits = default_limits());

struct DecompositionCheck {
  bool holds = false;
  CharPoly lhs;
  CharPoly rhs;
};
DecompositionCheck verify_decomposition(const BigRat& c, unsigned n, std::uint32_t p,
                                        const Limits& limits = default_limits());

struct GcdBound {
  BigInt value;
  std::size_t operand_bits = 0;
};
// gcd over the primes of p^(2^n) + 1
GcdBound gcd_orbit_bound(unsigned n, std::span<const std::uint64_t> primes,
                         std::uint64_t bit_cap = std::uint64_t{1} << 34);

std::optional<std::uint64_t> half_density_witness(const BigInt& a, const BigInt& b, std::uint64_t bound);

}  // namespace itc

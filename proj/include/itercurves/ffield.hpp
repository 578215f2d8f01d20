#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "itercurves/limits.hpp"
#include "itercurves/ratpoly.hpp"

namespace itc {

// Element of F_q stored as its base-p digit encoding: sum d_i p^i where
// d_0 + d_1 x + ... is the reduced representative modulo the field modulus.
struct Fq {
  std::uint32_t v = 0;
  friend auto operator<=>(const Fq&, const Fq&) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  static FieldPtr make(std::uint32_t p, unsigned m, const Limits& limits = default_limits());

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t q() const { return q_; }
  std::span<const std::uint32_t> modulus() const { return modulus_; }  // monic, low to high
  bool has_tables() const { return !log_.empty(); }

  Fq zero() const { return {0}; }
  Fq one() const { return {1}; }
  Fq from_int(long long a) const;
  Fq from_bigint(const BigInt& a) const;
  Fq from_rat(const BigRat& a) const;  // BadReduction if p divides the denominator
  Fq from_digits(std::span<const std::uint32_t> d) const;
  std::vector<std::uint32_t> digits(Fq a) const;
  Fq element(std::uint64_t index) const { return {static_cast<std::uint32_t>(index)}; }
  Fq gen() const;  // class of x (m > 1)

  Fq add(Fq a, Fq b) const {
    if (m_ == 1) {
      std::uint32_t s = a.v + b.v;
      return {s >= p_ ? s - p_ : s};
    }
    return add_slow(a, b);
  }
  Fq neg(Fq a) const;
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return {0};
    if (m_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
    if (!log_.empty()) return {exp_[log_[a.v] + log_[b.v]]};
    return mul_slow(a, b);
  }
  Fq sqr(Fq a) const { return mul(a, a); }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;
  Fq pow(Fq a, const BigInt& e) const;

  // -1, 0, +1
  int quad_char(Fq a) const {
    if (a.v == 0) return 0;
    if (!sq_.empty()) return sq_[a.v] ? 1 : -1;
    if (!log_.empty()) return (log_[a.v] & 1u) ? -1 : 1;
    return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
  }
  std::optional<Fq> sqrt(Fq a) const;

  Fq primitive() const { return primitive_; }
  Fq nonsquare() const { return nonsquare_; }
  bool in_subfield(Fq a, unsigned r) const;  // a in F_{p^r}, r | m

  // Horner evaluation of coefficients given low to high
  Fq eval(std::span<const Fq> coeffs, Fq x) const {
    Fq acc{0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
    return acc;
  }
  std::vector<Fq> reduce(const RatPoly& p) const;

 private:
  FieldCtx(std::uint32_t p, unsigned m, const Limits& limits);
  Fq add_slow(Fq a, Fq b) const;
  Fq mul_slow(Fq a, Fq b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> ppow_;  // p^i
  std::vector<std::uint32_t> log_, exp_;
  std::vector<char> sq_;             // prime field square table
  Fq primitive_{0}, nonsquare_{0};
};

inline FieldPtr make_field(std::uint32_t p, unsigned m, const Limits& limits = default_limits()) {
  return FieldCtx::make(p, m, limits);
}

bool is_small_prime(std::uint64_t n);

// 2-adic valuation of p^(2^t) - 1
unsigned v2_of_power_minus_one(std::uint64_t p, unsigned t);

// alpha with alpha^(2^(n+1)) = 1 and alpha a nonsquare in F_{p^m};
// needs p = +-3 mod 8 and m < 2^n
Fq two_power_nonsquare(const FieldCtx& F, unsigned n);
Fq two_power_nonsquare(unsigned n, std::uint32_t p, unsigned m);

// Embedding of the subfield F_{p^r} (with its own deterministic modulus)
// into F: the image of its generator x, found as a root of its modulus.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr small, FieldPtr big);
  Fq operator()(Fq a) const;  // small -> big
  std::optional<Fq> preimage(Fq b) const;
  const FieldCtx& small() const { return *small_; }
  const FieldCtx& big() const { return *big_; }

 private:
  FieldPtr small_, big_;
  Fq root_;
  std::vector<Fq> table_;  // image of every element of the small field
};

}  // namespace itc

#include <string>
#include <unordered_map>

#include "itercurves/error.hpp"
#include "itercurves/ffield.hpp"

namespace itc {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  std::uint64_t inv_lead = 1;
  {
    // f is monic in every caller except gcd, handle the general case anyway
    std::uint64_t b = f.back() % p, e = p - 2;
    while (e) {
      if (e & 1) inv_lead = inv_lead * b % p;
      b = b * b % p;
      e >>= 1;
    }
  }
  while (a.size() > df) {
    std::uint64_t c = a.back() * inv_lead % p;
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f, p);
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    Poly g = poly_gcd(t, f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr FieldCtx::make(std::uint32_t p, unsigned m, const Limits& limits) {
  return FieldPtr(new FieldCtx(p, m, limits));
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned m, const Limits& limits) : p_(p), m_(m) {
  require(p > 2 && is_small_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
  require(m >= 1, ErrorCode::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    ppow_.push_back(q);
    require(q <= limits.q_width / p, ErrorCode::CapExceeded,
            "field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds width");
    q *= p;
  }
  ppow_.push_back(q);
  q_ = q;

  // smallest monic irreducible by encoding of its lower coefficients
  if (m == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t code = 0; code < q; ++code) {
      Poly f(m + 1, 0);
      for (unsigned i = 0; i < m; ++i) f[i] = code / ppow_[i] % p;
      f[m] = 1;
      if (f[0] == 0) continue;  // divisible by x
      if (irreducible(f, p)) {
        modulus_.assign(f.begin(), f.end());
        break;
      }
    }
    require(!modulus_.empty(), ErrorCode::Internal, "no irreducible modulus found");
  }

  auto is_primitive = [&](Fq g, const std::vector<std::uint64_t>& rs) {
    for (std::uint64_t r : rs)
      if (pow(g, (q_ - 1) / r) == one()) return false;
    return true;
  };
  const auto rs = prime_factors(q_ - 1);
  for (std::uint64_t i = 2; i < q_; ++i) {
    Fq g{static_cast<std::uint32_t>(i)};
    if (is_primitive(g, rs)) {
      primitive_ = g;
      break;
    }
  }
  require(primitive_.v != 0, ErrorCode::Internal, "no primitive element");

  if (m == 1) {
    if (q_ <= limits.table_limit) {
      sq_.assign(p, 0);
      for (std::uint64_t x = 1; x < p; ++x) sq_[x * x % p] = 1;
    }
  } else if (q_ <= limits.table_limit) {
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    Fq e = one();
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = exp_[i + q_ - 1] = e.v;
      log_[e.v] = static_cast<std::uint32_t>(i);
      e = mul_slow(e, primitive_);
    }
  }
  for (std::uint64_t i = 1; i < q_; ++i) {
    if (quad_char(Fq{static_cast<std::uint32_t>(i)}) == -1) {
      nonsquare_ = Fq{static_cast<std::uint32_t>(i)};
      break;
    }
  }
}

Fq FieldCtx::from_int(long long a) const {
  long long r = a % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Fq FieldCtx::from_bigint(const BigInt& a) const {
  return {static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_mpz_t(), p_))};
}

Fq FieldCtx::from_rat(const BigRat& a) const {
  Fq den = from_bigint(a.get_den());
  if (den.v == 0)
    throw BadReductionError(p_, "denominator divisible by " + std::to_string(p_));
  return div(from_bigint(a.get_num()), den);
}

Fq FieldCtx::from_digits(std::span<const std::uint32_t> d) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < d.size() && i < m_; ++i) v += (d[i] % p_) * ppow_[i];
  return {static_cast<std::uint32_t>(v)};
}

std::vector<std::uint32_t> FieldCtx::digits(Fq a) const {
  std::vector<std::uint32_t> d(m_);
  std::uint32_t v = a.v;
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Fq FieldCtx::gen() const {
  if (m_ == 1) return from_int(-static_cast<long long>(modulus_[0]));
  return {static_cast<std::uint32_t>(p_)};
}

Fq FieldCtx::add_slow(Fq a, Fq b) const {
  std::uint32_t x = a.v, y = b.v;
  std::uint64_t out = 0;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * ppow_[i];
    x /= p_;
    y /= p_;
  }
  return {static_cast<std::uint32_t>(out)};
}

Fq FieldCtx::neg(Fq a) const {
  if (m_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
  std::uint32_t x = a.v;
  std::uint64_t out = 0;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * ppow_[i];
    x /= p_;
  }
  return {static_cast<std::uint32_t>(out)};
}

Fq FieldCtx::mul_slow(Fq a, Fq b) const {
  const std::uint64_t p = p_;
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> r(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < m_; ++j) r[i + j] = (r[i + j] + std::uint64_t{da[i]} * db[j]) % p;
  }
  for (std::size_t k = r.size(); k-- > m_;) {
    std::uint64_t c = r[k];
    if (!c) continue;
    for (unsigned j = 0; j < m_; ++j) r[k - m_ + j] = (r[k - m_ + j] + (p - c) * modulus_[j]) % p;
    r[k] = 0;
  }
  std::uint64_t out = 0;
  for (unsigned i = 0; i < m_; ++i) out += r[i] * ppow_[i];
  return {static_cast<std::uint32_t>(out)};
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
  if (!log_.empty()) {
    if (a.v == 0) return e == 0 ? one() : zero();
    return {exp_[(std::uint64_t{log_[a.v]} * (e % (q_ - 1))) % (q_ - 1)]};
  }
  Fq r = one();
  while (e) {
    if (e & 1) r = m_ == 1 ? mul(r, a) : mul_slow(r, a);
    e >>= 1;
    if (e) a = m_ == 1 ? mul(a, a) : mul_slow(a, a);
  }
  return r;
}

Fq FieldCtx::pow(Fq a, const BigInt& e) const {
  require(e >= 0, ErrorCode::InvalidArgument, "negative exponent");
  if (a.v == 0) return e == 0 ? one() : zero();
  BigInt r = e % BigInt(static_cast<unsigned long>(q_ - 1));
  return pow(a, static_cast<std::uint64_t>(r.get_ui()));
}

Fq FieldCtx::inv(Fq a) const {
  require(a.v != 0, ErrorCode::InvalidArgument, "inverse of zero");
  if (!log_.empty()) return {exp_[(q_ - 1) - log_[a.v]]};
  return pow(a, q_ - 2);
}

std::optional<Fq> FieldCtx::sqrt(Fq a) const {
  if (a.v == 0) return zero();
  if (quad_char(a) != 1) return std::nullopt;
  if (!log_.empty()) return Fq{exp_[log_[a.v] / 2]};
  // Tonelli-Shanks
  std::uint64_t t = q_ - 1;
  unsigned s = 0;
  while (!(t & 1)) {
    t >>= 1;
    ++s;
  }
  Fq z = pow(nonsquare_, t);
  Fq x = pow(a, (t + 1) / 2);
  Fq b = pow(a, t);
  unsigned mexp = s;
  while (b != one()) {
    unsigned i = 0;
    Fq bb = b;
    while (bb != one()) {
      bb = mul(bb, bb);
      ++i;
    }
    Fq w = z;
    for (unsigned j = 0; j + i + 1 < mexp; ++j) w = mul(w, w);
    x = mul(x, w);
    z = mul(w, w);
    b = mul(b, z);
    mexp = i;
  }
  return x;
}

bool FieldCtx::in_subfield(Fq a, unsigned r) const {
  require(r >= 1 && m_ % r == 0, ErrorCode::InvalidArgument, "subfield degree must divide m");
  return pow(a, ppow_[r]) == a;
}

std::vector<Fq> FieldCtx::reduce(const RatPoly& poly) const {
  std::vector<Fq> out;
  out.reserve(poly.coeffs().size());
  for (const auto& c : poly.coeffs()) out.push_back(from_rat(c));
  return out;
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr small, FieldPtr big)
    : small_(std::move(small)), big_(std::move(big)) {
  require(small_->p() == big_->p() && big_->degree() % small_->degree() == 0,
          ErrorCode::InvalidArgument, "not a subfield");
  std::vector<Fq> mod;
  for (auto c : small_->modulus()) mod.push_back(big_->from_int(c));
  bool found = false;
  for (std::uint64_t i = 0; i < big_->q() && !found; ++i) {
    Fq cand = big_->element(i);
    if (big_->eval(mod, cand) == big_->zero()) {
      root_ = cand;
      found = true;
    }
  }
  require(found, ErrorCode::Internal, "subfield modulus has no root");
  table_.resize(small_->q());
  for (std::uint64_t i = 0; i < small_->q(); ++i) {
    auto d = small_->digits(small_->element(i));
    std::vector<Fq> coeffs;
    for (auto di : d) coeffs.push_back(big_->from_int(di));
    table_[i] = big_->eval(coeffs, root_);
  }
}

Fq SubfieldEmbedding::operator()(Fq a) const { return table_.at(a.v); }

std::optional<Fq> SubfieldEmbedding::preimage(Fq b) const {
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] == b) return Fq{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

}  // namespace itc

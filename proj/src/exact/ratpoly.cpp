#include "itercurves/ratpoly.hpp"

#include <algorithm>
#include <sstream>

#include "itercurves/error.hpp"

namespace itc {

namespace {
const BigRat kZero(0);
}

RatPoly::RatPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<BigRat> coeffs) : RatPoly(std::vector<BigRat>(coeffs)) {}

RatPoly RatPoly::constant(const BigRat& c) { return RatPoly({c}); }
RatPoly RatPoly::x() { return RatPoly({BigRat(0), BigRat(1)}); }

RatPoly RatPoly::monomial(const BigRat& c, std::size_t k) {
  std::vector<BigRat> v(k + 1, BigRat(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigRat> v;
  for (long c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(const std::vector<BigInt>& coeffs) {
  std::vector<BigRat> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRat& RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const BigRat& RatPoly::lead() const {
  require(!is_zero(), ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigRat RatPoly::operator()(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * BigRat(static_cast<unsigned long>(i));
  return RatPoly(std::move(v));
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += RatPoly::constant(*it);
  }
  return acc;
}

RatPoly compose(const RatPoly& p, const RatPoly& q) { return p.compose(q); }

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly result = RatPoly::constant(BigRat(1)), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RatPoly RatPoly::reversed() const {
  std::vector<BigRat> v(coeffs_.rbegin(), coeffs_.rend());
  return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled_arg(const BigRat& a, const BigRat& b) const {
  return compose(RatPoly({b, a}));
}

std::pair<std::vector<BigInt>, BigInt> RatPoly::integerized() const {
  BigInt d(1);
  for (const auto& c : coeffs_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num() * (d / c.get_den()));
  return {std::move(out), d};
}

bool RatPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c.get_den() == 1; });
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const BigRat& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

// Convolution on integer numerators, one division per output coefficient.
RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [pa, da] = a.integerized();
  auto [pb, db] = b.integerized();
  std::vector<BigInt> acc(pa.size() + pb.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] == 0) continue;
    for (std::size_t j = 0; j < pb.size(); ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), pa[i].get_mpz_t(), pb[j].get_mpz_t());
  }
  BigInt den = da * db;
  std::vector<BigRat> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.push_back(make_rat(v, den));
  return RatPoly(std::move(out));
}

RatPoly operator-(RatPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  require(!d.is_zero(), ErrorCode::ZeroPolynomial, "division by zero polynomial");
  std::vector<BigRat> rem = coeffs_;
  int dd = d.degree();
  int qdeg = degree() - dd;
  if (qdeg < 0) return {RatPoly(), *this};
  std::vector<BigRat> quo(qdeg + 1, BigRat(0));
  BigRat inv_lead = 1 / d.lead();
  for (int k = qdeg; k >= 0; --k) {
    BigRat q = rem[k + dd] * inv_lead;
    quo[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * d.coeffs_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRat& c = coeffs_[i];
    if (c == 0) continue;
    BigRat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << itc::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace itc

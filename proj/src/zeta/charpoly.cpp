#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "itercurves/error.hpp"
#include "itercurves/zeta.hpp"

namespace itc {

CharPoly::CharPoly(std::vector<BigInt> coeffs, std::uint32_t p) : a_(std::move(coeffs)), p_(p) {
  require(!a_.empty() && a_[0] == 1 && a_.size() % 2 == 1, ErrorCode::InvalidArgument,
          "characteristic polynomial needs a_0 = 1 and even degree");
}

BigInt CharPoly::at(const BigInt& t) const {
  BigInt acc(0);
  for (const auto& a : a_) acc = acc * t + a;
  return acc;
}

bool CharPoly::functional_equation_holds() const {
  const unsigned g = genus();
  for (unsigned i = 1; i <= g; ++i)
    if (a_[g + i] != pow(BigInt(p_), i) * a_[g - i]) return false;
  return true;
}

// roots of chi(sqrt(p) u) / p^g lie on |u| = 1
bool CharPoly::roots_on_circle(double tol) const {
  const unsigned d = 2 * genus();
  if (d == 0) return true;
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Mat comp = Mat::Zero(d, d);
  const long double sp = std::sqrt(static_cast<long double>(p_));
  for (unsigned i = 1; i <= d; ++i) {
    long double c = static_cast<long double>(a_[i].get_d()) / std::pow(sp, static_cast<long double>(i));
    comp(0, i - 1) = -c;
  }
  for (unsigned i = 1; i < d; ++i) comp(i, i - 1) = 1;
  Eigen::EigenSolver<Mat> es(comp, false);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::fabs(std::abs(es.eigenvalues()[i]) - 1.0L) > tol) return false;
  return true;
}

std::vector<BigInt> CharPoly::ascending() const { return {a_.rbegin(), a_.rend()}; }

std::string CharPoly::to_string() const {
  std::vector<BigRat> c;
  for (const auto& v : ascending()) c.emplace_back(v);
  return RatPoly(c).to_string("t");
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  require(a.p_ == b.p_, ErrorCode::InvalidArgument, "characteristic polynomials over different primes");
  std::vector<BigInt> r(a.a_.size() + b.a_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    for (std::size_t j = 0; j < b.a_.size(); ++j) r[i + j] += a.a_[i] * b.a_[j];
  return CharPoly(std::move(r), a.p_);
}

bool within_hasse_weil(std::uint64_t N, std::uint64_t q, unsigned g) {
  BigInt diff = BigInt(static_cast<unsigned long>(N)) - BigInt(static_cast<unsigned long>(q)) - 1;
  return diff * diff <= BigInt(4) * g * g * BigInt(static_cast<unsigned long>(q));
}

ZetaResult char_poly(const HyperCurve& curve, std::uint32_t p, const Limits& limits) {
  check_good_reduction(curve, p);
  const unsigned g = curve.genus();
  std::vector<std::uint64_t> counts;
  std::vector<BigInt> t(g + 2, BigInt(0));  // t_k = N_k - p^k - 1
  bool hw = true;
  for (unsigned m = 1; m <= g; ++m) {
    auto F = make_field(p, m, limits);
    std::uint64_t N = count_points(curve, *F);
    counts.push_back(N);
    hw = hw && within_hasse_weil(N, F->q(), g);
    t[m] = BigInt(static_cast<unsigned long>(N)) - pow(BigInt(p), m) - 1;
  }
  std::vector<BigInt> a(2 * g + 1, BigInt(0));
  a[0] = 1;
  for (unsigned i = 1; i <= g; ++i) {
    BigInt s(0);
    for (unsigned k = 1; k <= i; ++k) s += t[k] * a[i - k];
    require(mpz_divisible_ui_p(s.get_mpz_t(), i) != 0, ErrorCode::Internal,
            "non-integral Frobenius coefficient");
    a[i] = s / i;
  }
  for (unsigned i = 1; i <= g; ++i) a[g + i] = pow(BigInt(p), i) * a[g - i];
  ZetaResult out{CharPoly(a, p), counts, std::nullopt, hw, true};
  out.roots_ok = out.cp.roots_on_circle();

  // predict N_{g+1} from the completed polynomial
  BigInt qg1 = pow(BigInt(p), g + 1);
  if (g >= 1 && qg1 <= BigInt(static_cast<unsigned long>(limits.q_width))) {
    BigInt tg1 = (g + 1) * a[g + 1];
    for (unsigned j = 1; j <= g; ++j) tg1 -= t[j] * a[g + 1 - j];
    BigInt predicted = qg1 + 1 + tg1;
    auto F = make_field(p, g + 1, limits);
    std::uint64_t N = count_points(curve, *F);
    out.hasse_weil = out.hasse_weil && within_hasse_weil(N, F->q(), g);
    out.self_check = predicted == BigInt(static_cast<unsigned long>(N));
  }
  return out;
}

BigInt jacobian_order(const CharPoly& cp) { return cp.at(BigInt(1)); }

}  // namespace itc

#include "itercurves/curves.hpp"
#include "itercurves/error.hpp"

namespace itc {

namespace {

std::vector<BigRat> mul_trunc(const std::vector<BigRat>& a, const std::vector<BigRat>& b, unsigned K) {
  std::vector<BigRat> r(K, BigRat(0));
  for (std::size_t i = 0; i < a.size() && i < K; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < K; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

// Newton iteration s <- s (3 - h s^2) / 2, doubling the precision each step.
SeriesExpansion sqrt_recip_series(const RatPoly& h, unsigned K) {
  require(h.coeff(0) == 1, ErrorCode::InvalidArgument, "series needs h(0) = 1");
  require(K >= 1 && K <= 64, ErrorCode::InvalidArgument, "order must be in 1..64");
  std::vector<BigRat> hv(h.coeffs().begin(), h.coeffs().end());
  std::vector<BigRat> s{BigRat(1)};
  unsigned prec = 1;
  while (prec < K) {
    prec = std::min(2 * prec, K);
    auto hs2 = mul_trunc(hv, mul_trunc(s, s, prec), prec);
    for (auto& c : hs2) c = -c;
    hs2[0] += 3;
    s = mul_trunc(s, hs2, prec);
    for (auto& c : s) c /= 2;
  }
  s.resize(K, BigRat(0));
  return {s};
}

SeriesExpansion formal_integral(const SeriesExpansion& s, unsigned i) {
  std::vector<BigRat> out(s.coeffs.size() + i + 1, BigRat(0));
  for (std::size_t k = 0; k < s.coeffs.size(); ++k)
    out[k + i + 1] = s.coeffs[k] / BigRat(static_cast<unsigned long>(k + i + 1));
  return {out};
}

}  // namespace itc

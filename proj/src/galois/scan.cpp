#include <algorithm>
#include <numeric>

#include "itercurves/error.hpp"
#include "itercurves/galois.hpp"

namespace itc {

std::vector<BigRat> scan_candidates(const ScanRange& range) {
  require(range.bound >= 0, ErrorCode::InvalidArgument, "negative scan bound");
  require(range.bound.fits_slong_p(), ErrorCode::CapExceeded, "scan bound too large");
  const long B = range.bound.get_si();
  std::vector<BigRat> out;
  if (range.kind == ScanRange::Kind::Integers) {
    out.emplace_back(0);
    for (long a = 1; a <= B; ++a) {
      out.emplace_back(-a);
      out.emplace_back(a);
    }
    return out;
  }
  // height 1 holds -1, 0, 1; larger heights follow, each sorted by numerator
  for (long h = 1; h <= B; ++h) {
    std::vector<std::pair<long, long>> level;
    for (long b = 1; b <= h; ++b)
      for (long a = -h; a <= h; ++a) {
        if (std::max(std::labs(a), b) != h) continue;
        if (std::gcd(a, b) != 1) continue;
        level.emplace_back(a, b);
      }
    std::sort(level.begin(), level.end());
    for (auto [a, b] : level) out.push_back(make_rat(BigInt(a), BigInt(b)));
  }
  return out;
}

namespace {

void check_n(unsigned n) {
  require(n >= 2 && n <= 5, ErrorCode::InvalidArgument, "scan supports n in 2..5");
}

std::vector<BigRat> keep(const std::vector<BigRat>& cands, const std::vector<char>& hit) {
  std::vector<BigRat> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (hit[i]) out.push_back(cands[i]);
  return out;
}

}  // namespace

std::vector<BigRat> scan_newly_small_serial(unsigned n, const ScanRange& range, const Limits& limits) {
  check_n(n);
  auto cands = scan_candidates(range);
  std::vector<char> hit(cands.size(), 0);
  for (std::size_t i = 0; i < cands.size(); ++i) hit[i] = newly_small_at(cands[i], n, limits);
  return keep(cands, hit);
}

std::vector<BigRat> scan_newly_small(unsigned n, const ScanRange& range, const Limits& limits) {
  check_n(n);
  auto cands = scan_candidates(range);
  std::vector<char> hit(cands.size(), 0);
  const long total = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic, 512)
  for (long i = 0; i < total; ++i) hit[i] = newly_small_at(cands[i], n, limits);
  return keep(cands, hit);
}

}  // namespace itc

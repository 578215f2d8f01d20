#include <string>

#include "itercurves/error.hpp"
#include "itercurves/zeta.hpp"

namespace itc {

namespace kernels {

std::int64_t char_sum_serial(const FieldCtx& F, std::span<const Fq> h) {
  std::int64_t acc = 0;
  const std::uint64_t q = F.q();
  for (std::uint64_t i = 0; i < q; ++i) acc += F.quad_char(F.eval(h, F.element(i)));
  return acc;
}

std::int64_t char_sum_omp(const FieldCtx& F, std::span<const Fq> h) {
  std::int64_t acc = 0;
  const std::int64_t q = static_cast<std::int64_t>(F.q());
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (std::int64_t i = 0; i < q; ++i) acc += F.quad_char(F.eval(h, F.element(static_cast<std::uint64_t>(i))));
  return acc;
}

}  // namespace kernels

bool has_good_reduction(const HyperCurve& curve, std::uint32_t p) { return reduces_squarefree(curve.h(), p); }

void check_good_reduction(const HyperCurve& curve, std::uint32_t p) {
  if (!has_good_reduction(curve, p))
    throw BadReductionError(p, curve.label() + " has bad reduction at " + std::to_string(p));
}

namespace {

template <class Kernel>
std::uint64_t count_with(const HyperCurve& curve, const FieldCtx& F, Kernel kernel) {
  check_good_reduction(curve, F.p());
  const auto h = F.reduce(curve.h());
  std::int64_t total = static_cast<std::int64_t>(F.q()) + kernel(F, h);
  if (curve.degree() % 2)
    total += 1;
  else
    total += 1 + F.quad_char(h.back());
  return static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t count_points(const HyperCurve& curve, const FieldCtx& F) {
  return count_with(curve, F, kernels::char_sum_omp);
}

std::uint64_t count_points_serial(const HyperCurve& curve, const FieldCtx& F) {
  return count_with(curve, F, kernels::char_sum_serial);
}

std::uint64_t count_points(const HyperCurve& curve, std::uint32_t p, unsigned m, const Limits& limits) {
  check_good_reduction(curve, p);
  auto F = make_field(p, m, limits);
  return count_points(curve, *F);
}

}  // namespace itc

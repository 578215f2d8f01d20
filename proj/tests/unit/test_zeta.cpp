#include <doctest.h>

#include "itercurves/curves.hpp"
#include "itercurves/error.hpp"
#include "itercurves/zeta.hpp"
#include "oracles/oracles.hpp"

using namespace itc;

namespace {

CharPoly cp(std::initializer_list<long> a, std::uint32_t p) {
  std::vector<BigInt> v;
  for (long x : a) v.emplace_back(x);
  return CharPoly(v, p);
}

}  // namespace

TEST_CASE("point counts") {
  HyperCurve b1 = curve_b_sign(1, 1);
  CHECK(b1.h() == RatPoly::from_ints({-4, -2, 2, 1}));
  CHECK(count_points(b1, 5, 1) == 6);
  CHECK(count_points(b1, 3, 1) == 2);
  CHECK(count_points(curve_frak(2), 3, 1) == 4);
  CHECK_THROWS_AS(count_points(curve_c(BigRat(1), 2), 2, 1), MathError);
  try {
    count_points(curve_c(BigRat(3), 2), 3, 1);
    FAIL("expected bad reduction");
  } catch (const BadReductionError& e) {
    CHECK(e.prime() == 3);
  }

  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (const HyperCurve& C : {curve_f(2), curve_b(BigRat(1), 2), curve_c(BigRat(-2), 3), twist(curve_f(2), BigInt(-1))}) {
        if (!has_good_reduction(C, p)) continue;
        if (std::pow(double(p), double(m)) > 3000) continue;
        auto F = make_field(p, m);
        std::uint64_t N = count_points(C, *F);
        CHECK(N == oracle::brute_count(C.h(), p, m));
        CHECK(N == count_points_serial(C, *F));
        CHECK(within_hasse_weil(N, F->q(), C.genus()));
      }
    }
  }
}

TEST_CASE("character sum kernels agree") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{101, 1}, {3, 7}, {7, 3}, {65537, 1}}) {
    auto F = make_field(p, m);
    auto h = F->reduce(curve_f(2).h());
    CHECK(kernels::char_sum_serial(*F, h) == kernels::char_sum_omp(*F, h));
  }
}

TEST_CASE("quadratic twist relation") {
  for (long c : {1L, 3L, -2L, 5L}) {
    HyperCurve B = curve_b(BigRat(c), 1);
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
      if (!has_good_reduction(B, p)) continue;
      for (long d : {-1L, 2L, 3L, -5L}) {
        if (d % long(p) == 0) continue;
        auto F = make_field(p, 1);
        if (F->quad_char(F->from_int(d)) != -1) continue;
        HyperCurve T = twist(B, BigInt(d));
        CHECK(count_points(T, p, 1) + count_points(B, p, 1) == 2 * (p + 1));
      }
    }
  }
}

TEST_CASE("characteristic polynomials") {
  ZetaResult z5 = char_poly(curve_b_sign(1, 1), 5);
  CHECK(z5.cp == cp({1, 0, 5}, 5));
  ZetaResult z3 = char_poly(curve_b_sign(1, 1), 3);
  CHECK(z3.cp == cp({1, -2, 3}, 3));
  ZetaResult b2 = char_poly(curve_b(BigRat(-2), 2), 5);
  CHECK(b2.cp == cp({1, 0, 0, 0, 25}, 5));
  CHECK(b2.cp.to_string() == "t^4 + 25");

  CHECK(jacobian_order(cp({1, 0, 5}, 5)) == 6);
  CHECK(jacobian_order(cp({1, 0, 0, 0, 25}, 5)) == 26);
  CHECK(jacobian_order(cp({1, -2, 3}, 3)) == 2);
  CHECK(jacobian_order(z5.cp) == count_points(curve_b_sign(1, 1), 5, 1));

  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    for (const HyperCurve& C : {curve_f(2), curve_c(BigRat(1), 3), curve_b(BigRat(3), 2), curve_f(1)}) {
      if (!has_good_reduction(C, p)) continue;
      ZetaResult z = char_poly(C, p);
      CHECK(z.cp.functional_equation_holds());
      CHECK(z.hasse_weil);
      CHECK(z.roots_ok);
      CHECK(z.cp.roots_on_circle());
      if (z.self_check) CHECK(*z.self_check);
      CHECK(jacobian_order(z.cp) > 0);
      // counts over F_(p^m) follow from the polynomial
      for (unsigned m = 1; m <= C.genus(); ++m) CHECK(z.counts[m - 1] == oracle::brute_count(C.h(), p, m));
    }
  }
}

TEST_CASE("chebyshev pattern") {
  CHECK(verify_chebyshev(2, 5).holds);
  CHECK(verify_chebyshev(2, 3).holds);
  ChebyshevCheck off = verify_chebyshev(1, 3);
  CHECK_FALSE(off.holds);
  CHECK_FALSE(off.in_theorem_range);
  CHECK(off.zeta.cp == cp({1, -2, 3}, 3));
  CHECK_THROWS_AS(verify_chebyshev(2, 7), MathError);
  CHECK_THROWS_AS(verify_chebyshev(2, 17), MathError);
  CHECK(chebyshev_target(3, 3) == cp({1, 0, 0, 0, 0, 0, 0, 0, 81}, 3));
}

TEST_CASE("decomposition") {
  CHECK(verify_decomposition(BigRat(1), 2, 3).holds);
  DecompositionCheck d = verify_decomposition(BigRat(-2), 3, 5);
  CHECK(d.holds);
  CHECK(d.lhs == cp({1, 0, 5}, 5) * cp({1, 0, 0, 0, 25}, 5));
  CHECK(verify_decomposition(BigRat(3), 2, 5).holds);
  CHECK(verify_decomposition(parse_rat("2/3"), 3, 13).holds);
  CHECK_THROWS_AS(verify_decomposition(BigRat(3), 2, 3), MathError);
}

TEST_CASE("gcd bound") {
  std::vector<std::uint64_t> p2{5, 13}, p3{5, 13, 29};
  CHECK(gcd_orbit_bound(1, p2).value == 2);
  CHECK(gcd_orbit_bound(2, p3).value == 2);
  for (unsigned n = 0; n <= 18; ++n) CHECK(gcd_orbit_bound(n, p2).value == oracle::full_gcd(n, {5, 13}));
  // a shared odd factor is detected: 3^2 + 1 = 10 and 7^2 + 1 = 50
  std::vector<std::uint64_t> p4{3, 7};
  CHECK(gcd_orbit_bound(1, p4).value == 10);
}

TEST_CASE("half density witness") {
  CHECK(half_density_witness(BigInt(0), BigInt(63), 100) == 5u);
  CHECK(half_density_witness(BigInt(0), BigInt(-2), 100) == 3u);
  CHECK_FALSE(half_density_witness(BigInt(0), BigInt(0), 100));
}

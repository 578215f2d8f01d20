#include <doctest.h>

#include "itercurves/dynamics.hpp"
#include "itercurves/error.hpp"
#include "oracles/oracles.hpp"

using namespace itc;

namespace {

std::vector<BigRat> rats(std::initializer_list<long> v) {
  std::vector<BigRat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("orbits") {
  CHECK(orbit(BigRat(3), 4).values == rats({3, 12, 147, 21612}));
  CHECK(orbit(BigRat(-2), 5).values == rats({-2, 2, 2, 2, 2}));
  CHECK(orbit(BigRat(-1), 4).values == rats({-1, 0, -1, 0}));
  CHECK_THROWS_AS(orbit(BigRat(3), 17), MathError);
  Limits big;
  big.orbit_cap = 20;
  CHECK(orbit(BigRat(1), 18, big).size() == 18);

  for (long c = -20; c <= 20; ++c) {
    Orbit o = orbit(BigRat(c), 8);
    CHECK(o.at(1) == c);
    for (unsigned k = 2; k <= 8; ++k) CHECK(o.at(k) == o.at(k - 1) * o.at(k - 1) + c);
  }
  for (long c = 1; c <= 50; ++c) {
    Orbit o = orbit(BigRat(c), 10);
    for (unsigned k = 2; k <= 10; ++k) CHECK(o.at(k) > o.at(k - 1));
  }
}

TEST_CASE("iterate polynomials") {
  CHECK(iterate_poly(BigRat(3), 2) == RatPoly::from_ints({12, 0, 6, 0, 1}));
  CHECK(iterate_poly(parse_rat("2/3"), 1) == RatPoly({parse_rat("2/3"), BigRat(0), BigRat(1)}));
  CHECK(iterate_poly(BigRat(0), 3) == RatPoly::monomial(BigRat(1), 8));
  for (const char* cs : {"3", "-2", "2/3", "-6/7", "1"}) {
    BigRat c = parse_rat(cs);
    RatPoly f({c, BigRat(0), BigRat(1)});
    Orbit o = orbit(c, 6);
    for (unsigned n = 2; n <= 6; ++n) {
      RatPoly p = iterate_poly(c, n);
      CHECK(p == compose(iterate_poly(c, n - 1), f));
      CHECK(p.coeff(0) == o.at(n));
    }
  }
  Limits small;
  small.degree_cap = 16;
  CHECK_THROWS_AS(iterate_poly(BigRat(1), 5, small), MathError);
}

TEST_CASE("discriminant recurrence") {
  for (long c : {1L, 3L, -2L, 5L}) {
    for (unsigned m = 2; m <= 5; ++m) {
      DiscRecurrence d = disc_recurrence_check(BigRat(c), m);
      CHECK(d.holds);
      CHECK(abs(d.disc) == d.predicted);
      CHECK(d.sign * d.predicted == d.disc);
    }
  }
  CHECK(disc_recurrence_check(BigRat(1), 3).holds);
  CHECK(disc_recurrence_check(parse_rat("-6/7"), 3).holds);
  CHECK_THROWS_AS(disc_recurrence_check(BigRat(0), 2), MathError);
}

TEST_CASE("chebyshev laurent identity") {
  for (unsigned n = 1; n <= 8; ++n) CHECK(chebyshev_identity_check(n));
  // (z + 1/z)^2 - 2 = z^2 + z^-2 read off the binomial row directly
  auto row = oracle::pascal_row(2);
  CHECK(row == std::vector<BigInt>{1, 2, 1});
}

TEST_CASE("cycle resultant support") {
  const BigRat c = parse_rat("-31/48");
  RatPoly g1({parse_rat("23/48"), parse_rat("-1/2"), BigRat(1)});
  RatPoly g2({parse_rat("53/48"), BigRat(2), BigRat(1)});
  const std::vector<BigInt> allowed{2, 3, 23, 53};
  for (const RatPoly& g : {g1, g2}) {
    SupportResult s = cycle_resultant_support(g, c, 4);
    CHECK(s.complete);
    CHECK(s.resultants.size() == 4);
    for (const auto& p : s.primes) CHECK(std::find(allowed.begin(), allowed.end(), p) != allowed.end());
    for (unsigned n = 1; n <= 4; ++n)
      CHECK(s.resultants[n - 1] == oracle::sylvester_resultant(g, iterate_poly(c, n)));
  }
  SupportResult t = cycle_resultant_support(RatPoly::from_ints({2, 1}), BigRat(-2), 5);
  CHECK(t.primes == std::vector<BigInt>{2});
  for (const auto& r : t.resultants) CHECK(r == 2);
}

#include <algorithm>

#include "itercurves/error.hpp"
#include "itercurves/factor.hpp"
#include "itercurves/galois.hpp"
#include "itercurves/search.hpp"

namespace itc {

namespace {

// D^2 h, same square class as h, integer coefficients
std::vector<std::uint64_t> reduce_scaled(const RatPoly& h, const BigInt& d, std::uint32_t p, int deg_even) {
  auto [P, D] = h.integerized();
  std::vector<std::uint64_t> out(deg_even + 1, 0);
  for (std::size_t i = 0; i < P.size(); ++i) {
    BigInt v = P[i] * D * d;
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  return out;
}

int legendre(std::uint64_t a, std::uint32_t p) {
  if (a % p == 0) return 0;
  BigInt A(static_cast<unsigned long>(a)), P(static_cast<unsigned long>(p));
  return mpz_legendre(A.get_mpz_t(), P.get_mpz_t());
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % p;
  return acc;
}

int even_degree(const RatPoly& h) { return h.degree() + (h.degree() % 2); }

bool has_point(const std::vector<std::vector<std::uint64_t>>& comps, std::uint32_t p) {
  // fibre over infinity: top coefficient of each homogenized component
  bool inf_ok = true;
  for (const auto& c : comps) inf_ok = inf_ok && legendre(c.back(), p) != -1;
  if (inf_ok) return true;
  for (std::uint64_t x = 0; x < p; ++x) {
    bool ok = true;
    for (const auto& c : comps) ok = ok && legendre(eval_mod(c, x, p), p) != -1;
    if (ok) return true;
  }
  return false;
}

void check_prime(std::uint32_t p) {
  require(p >= 3 && is_probable_prime(BigInt(static_cast<unsigned long>(p))), ErrorCode::InvalidArgument,
          "local obstruction needs an odd prime");
}

const std::vector<std::uint32_t>& odd_primes_to_50() {
  static const std::vector<std::uint32_t> ps = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  return ps;
}

}  // namespace

bool local_obstruction(const RatPoly& h, std::uint32_t p) {
  check_prime(p);
  require(!h.is_zero(), ErrorCode::ZeroPolynomial, "zero polynomial");
  return !has_point({reduce_scaled(h, BigInt(1), p, even_degree(h))}, p);
}

bool local_obstruction(const HyperCurve& curve, std::uint32_t p) { return local_obstruction(curve.h(), p); }

bool local_obstruction_pair(const RatPoly& h1, const RatPoly& h2, const BigInt& d, std::uint32_t p) {
  check_prime(p);
  require(!h1.is_zero() && !h2.is_zero() && d != 0, ErrorCode::ZeroPolynomial, "zero component");
  return !has_point({reduce_scaled(h1, d, p, even_degree(h1)), reduce_scaled(h2, d, p, even_degree(h2))}, p);
}

nlohmann::json SurveyReport::to_json() const {
  auto cs = nlohmann::json::array();
  for (const auto& e : curves) {
    nlohmann::json j = {{"label", e.label}, {"points", e.points.to_json()}};
    if (e.runge) {
      j["runge"] = {{"g", e.runge->g.to_string()},
                    {"h_rem", e.runge->h_rem.to_string()},
                    {"scale", to_string(e.runge->scale)},
                    {"x_bound", to_string(e.runge->x_bound)},
                    {"integer_points", e.runge->points.to_json()}};
    }
    if (!e.covers.empty()) {
      auto cv = nlohmann::json::array();
      for (const auto& t : e.covers) cv.push_back({{"d", to_string(t.d)}, {"obstructed_at", t.obstructions}});
      j["covers"] = cv;
    }
    cs.push_back(j);
  }
  auto cand = nlohmann::json::array();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    cand.push_back({{"c", to_string(candidates[i])}, {"newly_small_at_4", static_cast<bool>(confirmed[i])}});
  return {{"height", to_string(height)}, {"curves", cs}, {"candidates", cand}};
}

SurveyReport s4_survey(const BigInt& H) {
  SurveyReport rep;
  rep.height = H;
  const RatPoly x = RatPoly::x();
  const RatPoly sext = RatPoly::from_ints({1, 0, 2, 3, 3, 3, 1});
  const RatPoly cub = RatPoly::from_ints({1, 1, 2, 1});
  const RatPoly f3 = RatPoly::from_ints({0, 1, 1, 2, 1});
  auto cover_pair = [&](unsigned i) -> std::optional<std::pair<RatPoly, RatPoly>> {
    switch (i) {
      case 3: return std::pair{sext, -x};
      case 4: return std::pair{RatPoly::from_ints({1, 1}) * cub, sext};
      case 6: return std::pair{sext, f3};
      case 7: return std::pair{sext, -cub};
      default: return std::nullopt;
    }
  };

  std::vector<BigRat> xs;
  for (unsigned i = 1; i <= 7; ++i) {
    HyperCurve C = curve_f(i);
    SurveyEntry e{C.label(), naive_search(C, H), std::nullopt, {}};
    if (C.degree() % 2 == 0 && C.h().lead() > 0 && is_square(C.h().lead())) e.runge = runge_integer_points(C);
    if (auto pr = cover_pair(i)) {
      for (long d : {-1L, 1L}) {
        CoverTwist t{BigInt(d), {}};
        for (auto p : odd_primes_to_50())
          if (local_obstruction_pair(pr->first, pr->second, BigInt(d), p)) t.obstructions.push_back(p);
        e.covers.push_back(std::move(t));
      }
    }
    for (const auto& P : e.points.affine()) xs.push_back(P.x);
    if (e.runge)
      for (const auto& P : e.runge->points.affine()) xs.push_back(P.x);
    rep.curves.push_back(std::move(e));
  }

  std::erase_if(xs, [](const BigRat& v) { return v == 0 || v == -1 || v == -2; });
  std::sort(xs.begin(), xs.end(), [](const BigRat& a, const BigRat& b) {
    BigInt ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    if (a.get_num() != b.get_num()) return a.get_num() < b.get_num();
    return a.get_den() < b.get_den();
  });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  rep.candidates = xs;
  for (const auto& c : xs) rep.confirmed.push_back(newly_small_at(c, 4));
  return rep;
}

}  // namespace itc

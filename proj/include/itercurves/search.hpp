#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "itercurves/curves.hpp"

namespace itc {

struct PointList {
  std::string label;
  std::vector<RatPoint> points;  // infinity markers first, then by height of x, numerator, y
  std::string bound_kind;        // "height" or "runge-complete"
  BigInt bound;

  std::vector<RatPoint> affine() const;
  nlohmann::json to_json() const;
};

PointList naive_search(const HyperCurve& curve, const BigInt& H);
PointList naive_search_serial(const HyperCurve& curve, const BigInt& H);

struct RungeResult {
  PointList points;  // complete over Z
  RatPoly g;         // D * truncated square root, integer coefficients
  RatPoly h_rem;     // D^2 h - g^2
  BigInt scale;      // Y = scale * y
  BigInt x_bound;    // every integer point has |x| < x_bound
};

RungeResult runge_integer_points(const HyperCurve& curve);

// true iff no point of the projective model over F_p
bool local_obstruction(const HyperCurve& curve, std::uint32_t p);
bool local_obstruction(const RatPoly& h, std::uint32_t p);
// d u^2 = h1(x), d v^2 = h2(x) simultaneously, including the fibre over infinity
bool local_obstruction_pair(const RatPoly& h1, const RatPoly& h2, const BigInt& d, std::uint32_t p);

struct CoverTwist {
  BigInt d;
  std::vector<std::uint32_t> obstructions;  // primes p <= 50 with no F_p points
};

struct SurveyEntry {
  std::string label;
  PointList points;
  std::optional<RungeResult> runge;
  std::vector<CoverTwist> covers;  // Cases 3, 4, 6, 7
};

struct SurveyReport {
  BigInt height;
  std::vector<SurveyEntry> curves;
  std::vector<BigRat> candidates;  // x-coordinates outside {0, -1, -2}
  std::vector<bool> confirmed;     // newly small at 4 per the galois module
  nlohmann::json to_json() const;
};

SurveyReport s4_survey(const BigInt& H);

}  // namespace itc

#include "itercurves/polyjson.hpp"

#include "itercurves/error.hpp"

namespace itc {

nlohmann::json to_json(const RatPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

RatPoly poly_from_json(const nlohmann::json& j) {
  require(j.is_array(), ErrorCode::InvalidArgument, "polynomial must be a JSON array");
  std::vector<BigRat> coeffs;
  for (const auto& e : j) {
    if (e.is_string())
      coeffs.push_back(parse_rat(e.get<std::string>()));
    else if (e.is_number_integer())
      coeffs.emplace_back(e.get<long>());
    else
      fail(ErrorCode::InvalidArgument, "coefficient must be a string or integer");
  }
  return RatPoly(std::move(coeffs));
}

}  // namespace itc

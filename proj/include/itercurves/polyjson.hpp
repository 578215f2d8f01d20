#pragma once

#include <json.hpp>

#include "itercurves/ratpoly.hpp"

namespace itc {

// ["c0","c1",...] low to high; zero polynomial is []
nlohmann::json to_json(const RatPoly& p);
RatPoly poly_from_json(const nlohmann::json& j);

}  // namespace itc

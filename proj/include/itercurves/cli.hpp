#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace itc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitInternal = 4;

inline constexpr const char* kSchema = "itercurves/1";

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itc

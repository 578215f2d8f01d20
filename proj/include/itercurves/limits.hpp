#pragma once

#include <cstddef>
#include <cstdint>

namespace itc {

struct Limits {
  unsigned orbit_cap = 16;
  std::size_t degree_cap = 1024;
  std::uint64_t q_width = std::uint64_t{1} << 31;
  // log/exp tables are built for q up to this size
  std::uint64_t table_limit = std::uint64_t{1} << 20;
};

// process-wide defaults; the CLI overrides these from its flags
Limits& default_limits();

}  // namespace itc

#pragma once

#include <cstdint>
#include <string>

namespace x3 {

// Size limits for exact computations. Overridable via the X3_CAPS
// environment variable: a comma or space separated key=value list,
// e.g. X3_CAPS="chi=80,hadwiger=10".
struct Caps {
  int chi = 64;          // max vertex count for exact chromatic number
  int hadwiger = 12;     // max vertex count for exact Hadwiger number
  int minor_exact = 14;  // max vertex count for unbudgeted minor search
  std::uint64_t minor_budget = 2'000'000;  // node budget for bounded searches
};

// Process-wide caps, parsed from X3_CAPS once on first use.
const Caps& caps();

// Parse a key=value list; unknown keys raise ParseError.
Caps parse_caps(const std::string& text);

}  // namespace x3

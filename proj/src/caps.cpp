#include "x3/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "x3/errors.hpp"

namespace x3 {

Caps parse_caps(const std::string& text) {
  Caps c;
  std::string token;
  std::string norm = text;
  for (char& ch : norm) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(norm);
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw ParseError("caps entry without '=': " + token);
    }
    std::string key = token.substr(0, eq);
    std::string val = token.substr(eq + 1);
    try {
      if (key == "chi") {
        c.chi = std::stoi(val);
      } else if (key == "hadwiger") {
        c.hadwiger = std::stoi(val);
      } else if (key == "minor_exact") {
        c.minor_exact = std::stoi(val);
      } else if (key == "minor_budget") {
        c.minor_budget = std::stoull(val);
      } else {
        throw ParseError("unknown caps key: " + key);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad caps value for " + key + ": " + val);
    } catch (const std::out_of_range&) {
      throw ParseError("caps value out of range for " + key + ": " + val);
    }
  }
  return c;
}

const Caps& caps() {
  static const Caps instance = [] {
    const char* env = std::getenv("X3_CAPS");
    return env ? parse_caps(env) : Caps{};
  }();
  return instance;
}

}  // namespace x3

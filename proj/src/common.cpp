#include "endgrid/common.hpp"

#include <cstdlib>
#include <iostream>

namespace endgrid {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("ENDGRID_LOG");
    if (env == nullptr) return 0;
    const std::string value(env);
    if (value == "debug" || value == "2") return 2;
    if (value == "info" || value == "1") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[endgrid] " << msg << '\n';
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[endgrid:debug] " << msg << '\n';
}

std::uint32_t rand_below(std::mt19937& rng, std::uint32_t n) {
  if (n == 0) throw InvalidArgument("rand_below: n must be positive");
  const std::uint32_t limit = std::mt19937::max() - std::mt19937::max() % n;
  std::uint32_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

}  // namespace endgrid

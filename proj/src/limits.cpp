#include "mulideal/limits.hpp"

#include <cstdlib>
#include <string>

#include "mulideal/errors.hpp"

namespace mulideal {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* cap = std::getenv("MI_DIM_CAP"); cap != nullptr && *cap != '\0') {
    try {
      std::size_t used = 0;
      const long value = std::stol(cap, &used);
      if (used != std::string(cap).size() || value <= 0) throw InputError("");
      limits.dimension_cap = static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      throw InputError(std::string("MI_DIM_CAP must be a positive integer, got '") + cap + "'");
    }
  }
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

}  // namespace mulideal

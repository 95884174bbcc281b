#include "hilfrac/limits.hpp"

#include <cstdlib>
#include <string>

#include "hilfrac/error.hpp"

namespace hilfrac {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("HILFRAC_LIMIT"); raw != nullptr && *raw) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) {
      throw InvalidArgument(std::string("HILFRAC_LIMIT must be a positive integer, got '") +
                            raw + "'");
    }
    limits.max_entries = static_cast<std::size_t>(v);
    limits.max_cells = static_cast<std::size_t>(v);
  }
  return limits;
}

}  // namespace hilfrac

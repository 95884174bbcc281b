#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hilfrac/error.hpp"

namespace hilfrac {

/// Exact integer used for every count, rank and binomial in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Narrow an exact integer to a machine size, throwing instead of wrapping.
inline std::size_t to_size(const BigInt& v, const char* what = "value") {
  if (v < 0 || v > std::numeric_limits<std::size_t>::max()) {
    throw ResourceLimit(std::string(what) + " " + v.str() +
                        " does not fit in a machine word");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace hilfrac

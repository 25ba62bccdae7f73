#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "heegaard/errors.hpp"

namespace heegaard {

// Arbitrary precision integer used for normal coordinates, expansion
// lengths, intersection numbers and homology arithmetic.
using Int = boost::multiprecision::cpp_int;

inline std::string to_dec(const Int& v) { return v.str(); }

inline Int from_dec(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw error(errc::domain, "not a decimal integer: '" + s + "'");
  }
}

inline std::size_t bit_length(const Int& v) {
  if (v == 0) return 0;
  return std::size_t(boost::multiprecision::msb(v < 0 ? Int(-v) : v)) + 1;
}

// Converts to a machine integer, or fails the given guard description.
inline std::int64_t to_int64(const Int& v, const char* what) {
  require(v >= std::numeric_limits<std::int64_t>::min() &&
              v <= std::numeric_limits<std::int64_t>::max(),
          errc::guard, std::string(what) + " exceeds machine range");
  return static_cast<std::int64_t>(v);
}

}  // namespace heegaard

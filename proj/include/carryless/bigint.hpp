#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace carryless {

/// Arbitrary-precision signed integer used for counts and OEIS values.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt pow_big(unsigned base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace carryless

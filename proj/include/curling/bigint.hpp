#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace curling {

// Arbitrary-precision integer for values that outgrow 64 bits (compound
// curling numbers of tree powers reach 2^C(h+1,2), subsequence counts
// involve ic!).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt ipow(BigInt base, std::int64_t exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace curling

#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "isocut/error.hpp"

// Checked 128-bit arithmetic for the closed-form formulas. Every product that
// can grow with L^n goes through these helpers so overflow raises instead of
// wrapping.

namespace isocut::checked {

using wide = unsigned __int128;

inline wide add(wide a, wide b) {
  wide r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

inline wide sub(wide a, wide b) {
  if (b > a) {
    throw OverflowError("integer underflow in subtraction");
  }
  return a - b;
}

inline wide mul(wide a, wide b) {
  wide r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

inline wide pow(wide base, std::uint64_t exponent) {
  wide r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    r = mul(r, base);
  }
  return r;
}

inline std::uint64_t narrow(wide v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("value does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

inline std::string to_string(wide v) {
  if (v == 0) {
    return "0";
  }
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

} // namespace isocut::checked

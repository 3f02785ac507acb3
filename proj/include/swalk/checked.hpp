#pragma once

// Overflow-checked arithmetic on 128-bit signed integers.

#include <cstdint>
#include <string>

#include "swalk/errors.hpp"

namespace swalk {

using wide = __int128;

namespace detail {

inline bool fits_i64(wide v) {
  return v >= static_cast<wide>(INT64_MIN) && v <= static_cast<wide>(INT64_MAX);
}

}  // namespace detail

inline wide checked_add(wide a, wide b) {
  wide r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add");
  return r;
}

inline wide checked_sub(wide a, wide b) {
  wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub");
  return r;
}

inline wide checked_mul(wide a, wide b) {
  // Two 64-bit operands cannot overflow a 128-bit product.
  if (detail::fits_i64(a) && detail::fits_i64(b)) {
    return static_cast<wide>(static_cast<int64_t>(a)) * static_cast<int64_t>(b);
  }
  wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul");
  return r;
}

inline wide checked_neg(wide a) { return checked_sub(0, a); }

inline int64_t checked_narrow(wide a) {
  if (!detail::fits_i64(a)) throw OverflowError("narrowing to 64 bits");
  return static_cast<int64_t>(a);
}

std::string to_string(wide v);

}  // namespace swalk

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cext/error.hpp"

namespace cext {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Overflow-checked 64-bit arithmetic for lift values and cocycle entries.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "64-bit addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "64-bit subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "64-bit multiplication overflow");
  return r;
}

// "p/q" or "p"; denominators are printed only when != 1.
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

}  // namespace cext

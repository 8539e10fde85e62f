#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpcov {

// 64-bit arithmetic that reports overflow instead of wrapping.

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                                 const char* context) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error(std::string(context) +
                              ": 64-bit integer overflow");
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b,
                                 const char* context) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error(std::string(context) +
                              ": 64-bit integer overflow");
  return out;
}

}  // namespace fpcov

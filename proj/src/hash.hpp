#pragma once

#include <cstdint>
#include <string_view>

namespace glc::detail {

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;

/// 64-bit FNV-1a; pass a previous result as `seed` to chain.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = kFnvOffset) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace glc::detail

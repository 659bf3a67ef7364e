// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_HASH_HPP
#define TOOLMOL_HASH_HPP

#include <cstdint>
#include <string_view>

namespace toolmol {

// Stable 64-bit hashing. Used for fingerprints, seed derivation and the
// surrogate oracle noise term, so values must not depend on the standard
// library's std::hash (which is implementation-defined).

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

constexpr std::uint64_t fnv1a(std::string_view s,
                              std::uint64_t h = kFnvOffset) noexcept {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hashCombine(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(a ^ mix64(b));
}

// Maps a hash to [0, 1) with 53 bits of resolution.
constexpr double unitInterval(std::uint64_t h) noexcept {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Deterministic per-task seed streams: deriveSeed(run, generation, index, tag).
template <typename... Parts>
constexpr std::uint64_t deriveSeed(std::uint64_t base, Parts... parts) noexcept {
  std::uint64_t h = mix64(base);
  ((h = hashCombine(h, static_cast<std::uint64_t>(parts))), ...);
  return h;
}

}  // namespace toolmol

#endif

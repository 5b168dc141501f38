#pragma once

#include <cstdint>
#include <vector>

#include "ukd/permutation.hpp"

namespace ukd {

/// Permutations of length <= 16 packed four bits per entry, first entry in
/// the most significant used nibble. For a fixed length, numeric order of keys
/// is lexicographic order of the permutations.
using PatternKey = std::uint64_t;

inline constexpr int kMaxKeyLength = 16;

inline PatternKey pack(std::span<const int> values) {
  PatternKey key = 0;
  for (int v : values) key = (key << 4) | static_cast<PatternKey>(v - 1);
  return key;
}

inline PatternKey pack(const Permutation& p) { return pack(p.values()); }

inline std::vector<int> unpack_values(PatternKey key, int length) {
  std::vector<int> values(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    values[static_cast<std::size_t>(i)] = static_cast<int>(key & 0xF) + 1;
    key >>= 4;
  }
  return values;
}

inline Permutation unpack(PatternKey key, int length) {
  return unchecked_permutation(unpack_values(key, length));
}

}  // namespace ukd

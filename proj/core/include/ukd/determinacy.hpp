#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ukd/permutation.hpp"

namespace ukd {

/// The reduced length-k windows of a permutation, left to right. Consecutive
/// nodes overlap: the suffix pattern of one equals the prefix pattern of the
/// next.
struct WindowPath {
  int k = 0;
  std::vector<Permutation> nodes;

  /// Arc count; a path for an n-permutation has n - k arcs.
  int arc_count() const { return nodes.empty() ? 0 : static_cast<int>(nodes.size()) - 1; }
  /// Length of the permutations the path describes.
  int permutation_length() const { return nodes.empty() ? 0 : k + arc_count(); }
  bool satisfies_overlap() const;

  friend bool operator==(const WindowPath&, const WindowPath&) = default;
};

/// Requires 1 <= k <= n.
WindowPath window_path(const Permutation& p, int k);

/// Every pair of consecutive values x, x+1 sits at distance at most k-1.
bool is_uniquely_determined(const Permutation& p, int k);

/// Same verdict, read from the inverse: adjacent entries of p^{-1} differ by
/// at most k-1.
bool is_uniquely_determined_via_inverse(const Permutation& p, int k);

/// Smallest k for which p is uniquely k-determined (1 for n <= 1).
int ir_index(const Permutation& p);

struct IRHistogram {
  int n = 0;
  std::map<int, std::uint64_t> counts;
};

IRHistogram ir_distribution(int n, int max_n = kDefaultExhaustiveMaxN);

/// Maps an n-permutation with values a, b at non-adjacent positions i, j to
/// the uniquely (n-1)-determined n-permutation  i . middle . j, where the
/// middle is p with a and b removed and the leftover values relabelled onto
/// {1..n} \ {i, j} (i -> a, j -> b in the generic case).
Permutation key_bijection(const Permutation& p, int a, int b);

/// Inverse of key_bijection for the same (a, b).
Permutation key_bijection_inverse(const Permutation& image, int a, int b);

}  // namespace ukd

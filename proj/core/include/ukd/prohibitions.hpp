#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ukd/permutation.hpp"

namespace ukd {

/// The irreducible prohibited patterns for window length k: patterns of the
/// form xX(x+1) or (x+1)Xx that are not uniquely k-determined while both of
/// their longest proper factors are.
class ProhibitionSet {
 public:
  ProhibitionSet(int k, std::vector<Permutation> patterns);

  int k() const { return k_; }
  std::span<const Permutation> patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  std::map<int, std::size_t> by_length() const;
  int longest() const;

  bool contains(const Permutation& pattern) const;
  /// True iff some factor of p reduces to a member.
  bool occurs_in(const Permutation& p) const;

 private:
  int k_;
  std::vector<Permutation> patterns_;  // sorted by (length, lexicographic)
  std::vector<Permutation> lookup_;    // sorted lexicographically
};

/// Enumerates S_m for m = k+1 .. 2k-1 and keeps the irreducible prohibitions.
/// Requires 2 <= k <= max_k.
ProhibitionSet generate_prohibitions(int k, int max_k = kDefaultProhibitionMaxK);

/// Whether a prohibited pattern (not uniquely k-determined) is irreducible.
bool is_irreducible(const Permutation& p, int k);

/// The tightest violated pair: the smallest d(x, x+1) >= k, ties broken by
/// the smallest x.
struct Violation {
  int x;
  int position_x;     // 1-based position of x
  int position_next;  // 1-based position of x+1
};

/// nullopt iff p is uniquely k-determined.
std::optional<Violation> contains_prohibition(const Permutation& p, int k);

/// A value v such that extend_right(p, v) is again uniquely k-determined,
/// chosen by the constructive case analysis (new minimum, new maximum, or
/// the value of a close neighbour of the last entry, x-1 preferred).
int extension_witness(const Permutation& p, int k);

/// A uniquely k-determined n-permutation with no uniquely k-determined right
/// extension, if one exists.
std::optional<Permutation> find_crucial(int k, int n, int max_n = kDefaultExhaustiveMaxN);

}  // namespace ukd

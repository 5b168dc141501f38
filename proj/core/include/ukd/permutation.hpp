#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ukd/errors.hpp"

namespace ukd {

inline constexpr std::size_t kMaxPermutationLength = 64;

/// A bijection on {1, ..., n} in one-line notation. Positions handed to and
/// returned from the free functions below are 1-based, as are values;
/// operator[] is a plain 0-based index into the one-line word.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidInput unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  int operator[](std::size_t index) const { return values_[index]; }
  int at(int position) const;
  std::span<const int> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  /// 1-based position of `value`; throws InvalidInput if out of range.
  int position_of(int value) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

  friend Permutation reduce_pattern(std::span<const int> word);
  friend Permutation inverse(const Permutation& p);
  friend Permutation complement(const Permutation& p);
  friend Permutation extend_right(const Permutation& p, int value);
  friend Permutation unchecked_permutation(std::vector<int> values);

  std::vector<int> values_;
};

/// Builds a permutation without validation. For hot loops whose inputs are
/// permutations by construction.
Permutation unchecked_permutation(std::vector<int> values);

/// The permutation of {1..|word|} with the same relative order as `word`.
/// Throws InvalidInput on repeated entries.
Permutation reduce_pattern(std::span<const int> word);

Permutation inverse(const Permutation& p);

/// Entry-wise n - p_i + 1.
Permutation complement(const Permutation& p);

/// |pos(x) - pos(y)|.
int distance(const Permutation& p, int x, int y);

/// Reduced pattern of the factor p_i ... p_j, 1 <= i <= j <= n.
Permutation factor_pattern(const Permutation& p, int i, int j);

/// Adjoins `value` (1 <= value <= n+1) on the right: every existing entry
/// >= value is incremented first.
Permutation extend_right(const Permutation& p, int value);

bool is_monotone(const Permutation& p);

/// Calls fn(const Permutation&) for every permutation of {1..n} in
/// lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> values(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(values.begin(), values.end(), 1);
  do {
    fn(unchecked_permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

std::uint64_t factorial(int n);
BigInt big_factorial(int n);

// Text forms. Compact is the digit string ("13542") and is only defined for
// n <= 9; comma form ("1,3,5,4,2") works for every n.
enum class Notation { kCompact, kComma };

struct ParsedPermutation {
  Permutation permutation;
  Notation notation;
};

ParsedPermutation parse_permutation(std::string_view text);

/// Compact when possible, otherwise comma form.
std::string to_string(const Permutation& p);
std::string to_string(const Permutation& p, Notation notation);

}  // namespace ukd

template <>
struct std::hash<ukd::Permutation> {
  std::size_t operator()(const ukd::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

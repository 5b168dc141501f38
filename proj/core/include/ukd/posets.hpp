#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ukd/permutation.hpp"

namespace ukd {

/// A strict partial order on {1..n}, n <= 64, stored transitively closed as
/// one bitmask row per element.
class Poset {
 public:
  Poset() = default;

  /// Transitive closure of the given (u below v) pairs. Returns nullopt if
  /// the relation has a cycle.
  static std::optional<Poset> from_relations(int n,
                                             std::span<const std::pair<int, int>> below);

  int size() const { return n_; }
  bool below(int u, int v) const;
  bool comparable(int u, int v) const { return u == v || below(u, v) || below(v, u); }
  bool is_chain() const;

  /// Elements strictly below `v`, as a bitmask over elements 1..n (bit u-1).
  std::uint64_t down_mask(int v) const { return down_[static_cast<std::size_t>(v - 1)]; }

  /// Hasse diagram edges (u, v): u below v with nothing strictly between.
  std::vector<std::pair<int, int>> cover_relations() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> up_;    // up_[u-1]: elements strictly above u
  std::vector<std::uint64_t> down_;  // down_[v-1]: elements strictly below v
};

/// Value poset of p's window path: u below v (u < v) is forced whenever u and
/// v share a length-k window, then closed transitively. Requires k <= n.
Poset poset_from_permutation(const Permutation& p, int k);

/// Unordered incomparable pairs {u, v}, reported as (min, max), sorted.
std::vector<std::pair<int, int>> incomparable_pairs(const Poset& w);

BigInt count_linear_extensions(const Poset& w, int max_n = kDefaultPosetMaxN);

/// Calls fn(order) for every linear extension, where order lists the elements
/// bottom to top. Extensions arrive in lexicographic order of `order`.
void for_each_linear_extension(const Poset& w,
                               const std::function<void(std::span<const int>)>& fn);

/// Number of n-permutations sharing p's window path in P_k.
BigInt m_index(const Permutation& p, int k, int max_n = kDefaultPosetMaxN);

/// m -> number of n-permutations that are m-k-determined.
std::map<std::uint64_t, std::uint64_t> m_distribution(int n, int k,
                                                      int max_n = kDefaultExhaustiveMaxN);

std::string export_hasse_dot(const Poset& w);

}  // namespace ukd

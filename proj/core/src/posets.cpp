#include "ukd/posets.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

#include "ukd/determinacy.hpp"

namespace ukd {

namespace {

constexpr std::uint64_t bit(int element) { return std::uint64_t{1} << (element - 1); }

}  // namespace

std::optional<Poset> Poset::from_relations(int n,
                                           std::span<const std::pair<int, int>> below) {
  if (n < 0 || static_cast<std::size_t>(n) > kMaxPermutationLength) {
    throw InvalidInput("poset size " + std::to_string(n) + " is outside 0..64");
  }
  Poset w;
  w.n_ = n;
  w.up_.assign(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : below) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InvalidInput("relation element outside 1.." + std::to_string(n));
    }
    if (u == v) return std::nullopt;
    w.up_[static_cast<std::size_t>(u - 1)] |= bit(v);
  }
  // Warshall on bit rows.
  for (int mid = 1; mid <= n; ++mid) {
    const std::uint64_t above_mid = w.up_[static_cast<std::size_t>(mid - 1)];
    for (auto& row : w.up_) {
      if (row & bit(mid)) row |= above_mid;
    }
  }
  w.down_.assign(static_cast<std::size_t>(n), 0);
  for (int u = 1; u <= n; ++u) {
    const std::uint64_t row = w.up_[static_cast<std::size_t>(u - 1)];
    if (row & bit(u)) return std::nullopt;
    for (int v = 1; v <= n; ++v) {
      if (row & bit(v)) w.down_[static_cast<std::size_t>(v - 1)] |= bit(u);
    }
  }
  return w;
}

bool Poset::below(int u, int v) const {
  return (up_[static_cast<std::size_t>(u - 1)] & bit(v)) != 0;
}

bool Poset::is_chain() const {
  for (int u = 1; u <= n_; ++u) {
    const auto related = up_[static_cast<std::size_t>(u - 1)] | down_[static_cast<std::size_t>(u - 1)];
    if (std::popcount(related) != n_ - 1) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      if (!below(u, v)) continue;
      // u covers-below v iff no w with u < w < v
      if ((up_[static_cast<std::size_t>(u - 1)] & down_[static_cast<std::size_t>(v - 1)]) == 0) {
        covers.emplace_back(u, v);
      }
    }
  }
  return covers;
}

Poset poset_from_permutation(const Permutation& p, int k) {
  const int n = p.size();
  if (k < 1 || k > n) {
    throw InvalidInput("window length " + std::to_string(k) + " must lie in 1.." +
                       std::to_string(n));
  }
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && j - i <= k - 1; ++j) {
      const int u = p[static_cast<std::size_t>(i)];
      const int v = p[static_cast<std::size_t>(j)];
      relations.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  // The relation is a sub-order of 1 < 2 < ... < n, so it is acyclic.
  return *Poset::from_relations(n, relations);
}

std::vector<std::pair<int, int>> incomparable_pairs(const Poset& w) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= w.size(); ++u) {
    for (int v = u + 1; v <= w.size(); ++v) {
      if (!w.comparable(u, v)) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

BigInt count_linear_extensions(const Poset& w, int max_n) {
  const int n = w.size();
  if (n > max_n || n > 20) {
    throw ResourceLimit("linear-extension count for " + std::to_string(n) +
                        " elements exceeds the budget n <= " + std::to_string(std::min(max_n, 20)));
  }
  // Forward DP over order ideals, one popcount layer at a time.
  std::unordered_map<std::uint64_t, std::uint64_t> layer{{0, 1}};
  for (int size = 0; size < n; ++size) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    next.reserve(layer.size() * 2);
    for (auto [ideal, ways] : layer) {
      for (int e = 1; e <= n; ++e) {
        if ((ideal & bit(e)) == 0 && (w.down_mask(e) & ~ideal) == 0) {
          next[ideal | bit(e)] += ways;
        }
      }
    }
    layer = std::move(next);
  }
  BigInt total = 0;
  for (const auto& entry : layer) total += static_cast<unsigned long>(entry.second);
  return total;
}

void for_each_linear_extension(const Poset& w,
                               const std::function<void(std::span<const int>)>& fn) {
  const int n = w.size();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t placed) {
    if (static_cast<int>(order.size()) == n) {
      fn(order);
      return;
    }
    for (int e = 1; e <= n; ++e) {
      if ((placed & bit(e)) == 0 && (w.down_mask(e) & ~placed) == 0) {
        order.push_back(e);
        extend(placed | bit(e));
        order.pop_back();
      }
    }
  };
  extend(0);
}

BigInt m_index(const Permutation& p, int k, int max_n) {
  if (k < 1 || k > p.size()) {
    throw InvalidInput("window length " + std::to_string(k) + " must lie in 1.." +
                       std::to_string(p.size()));
  }
  if (is_uniquely_determined(p, k)) return 1;
  return count_linear_extensions(poset_from_permutation(p, k), max_n);
}

std::map<std::uint64_t, std::uint64_t> m_distribution(int n, int k, int max_n) {
  if (n > max_n) {
    throw ResourceLimit("m distribution over S_" + std::to_string(n) +
                        " exceeds the exhaustive budget n <= " + std::to_string(max_n));
  }
  if (k < 1 || k > n) {
    throw InvalidInput("window length " + std::to_string(k) + " must lie in 1.." +
                       std::to_string(n));
  }
  std::map<std::uint64_t, std::uint64_t> histogram;
  for_each_permutation(n, [&](const Permutation& p) {
    ++histogram[m_index(p, k).get_ui()];
  });
  return histogram;
}

std::string export_hasse_dot(const Poset& w) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int v = 1; v <= w.size(); ++v) out << "  \"" << v << "\";\n";
  for (auto [u, v] : w.cover_relations()) {
    out << "  \"" << u << "\" -> \"" << v << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ukd

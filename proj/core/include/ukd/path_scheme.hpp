#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ukd/permutation.hpp"

namespace ukd {

/// Undirected graph P(n, M) on {1..n}: x and y are adjacent iff |x - y| is
/// in M. The window scheme G_{k,n} uses M = {1, ..., k-1}.
class PathScheme {
 public:
  PathScheme(int n, std::vector<int> differences);

  int size() const { return n_; }
  std::span<const int> differences() const { return differences_; }
  bool adjacent(int x, int y) const;
  /// Neighbours of x in increasing order.
  std::vector<int> neighbours(int x) const;
  /// Edges (x, y) with x < y, sorted.
  std::vector<std::pair<int, int>> edges() const;
  int max_degree() const;

 private:
  int n_;
  std::vector<int> differences_;  // sorted, unique
  std::vector<bool> allowed_;     // allowed_[d] for d in 0..n-1
};

/// Throws InvalidInput when n < 1 or some difference lies outside 1..n-1.
PathScheme build_path_scheme(int n, std::span<const int> differences);

/// G_{k,n} = P(n, {1..min(k,n)-1}).
PathScheme window_scheme(int k, int n);

struct HamiltonianLimits {
  int max_n = kDefaultHamiltonianMaxN;
  /// Cap on live (visited-set, endpoint) states in one DP layer.
  std::size_t max_states = kDefaultHamiltonianMaxStates;
};

/// Number of directed Hamiltonian paths (each undirected path counted in both
/// orientations; a single node counts once).
BigInt count_hamiltonian_paths(const PathScheme& g, HamiltonianLimits limits = {});

/// Lazily yields each directed Hamiltonian path once, in lexicographic order
/// of the node sequence.
class HamiltonianPathCursor {
 public:
  explicit HamiltonianPathCursor(const PathScheme& g);
  std::optional<std::vector<int>> next();

 private:
  std::vector<std::vector<int>> adjacency_;
  int n_;
  int next_start_ = 1;
  bool emitted_ = false;
  std::vector<int> path_;
  std::vector<std::size_t> cursor_;
  std::vector<bool> visited_;
};

HamiltonianPathCursor enumerate_hamiltonian_paths(const PathScheme& g);

/// The Hamiltonian path of G_{k,n} spelled by p^{-1}. Throws InvalidInput if p
/// is not uniquely k-determined.
std::vector<int> phi(const Permutation& p, int k);

/// The uniquely k-determined permutation whose inverse spells `path`. Throws
/// InvalidInput if `path` is not a Hamiltonian path of G_{k,n}.
Permutation phi_inverse(std::span<const int> path, int k);

struct CountBounds {
  BigInt lower;
  BigInt upper;
};

/// (2((k-1)!)^floor(n/k), 2(2(k-1))^n), defined for k >= 2 and n >= 2k-1.
CountBounds bounds(int k, int n);

}  // namespace ukd

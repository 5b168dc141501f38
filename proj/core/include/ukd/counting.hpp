#pragma once

#include <string_view>
#include <vector>

#include "ukd/overlap_graph.hpp"
#include "ukd/path_scheme.hpp"
#include "ukd/permutation.hpp"

namespace ukd {

enum class TransferVariant {
  kNodeBased,   // nodes: uniquely k-determined (2k-1)-permutations
  kArcLabeled,  // nodes: (2k-2)-permutations, arcs: (2k-1)-permutations
};

/// A_{k,0..}: the number of uniquely k-determined n-permutations, indexed by
/// n from 0 (the empty permutation counts once).
struct CountTable {
  int k = 0;
  std::vector<BigInt> counts;
  /// Transfer engines that contributed; empty if only the Hamiltonian DP ran.
  std::vector<TransferVariant> transfer_variants;
};

/// Filters S_n through the distance criterion. For cross-checks only.
BigInt count_exhaustive(int k, int n, int max_n = kDefaultExhaustiveMaxN);

/// Directed Hamiltonian paths of G_{k,n}; n! when n <= k.
BigInt count_bruteforce(int k, int n, HamiltonianLimits limits = {});

std::string_view to_string(TransferVariant variant);

/// The pruned overlap graph whose walks are the uniquely k-determined
/// permutations. Node and label pruning both go through the prohibition set
/// L_k (a pattern survives iff no factor of it reduces into L_k).
/// max_candidates bounds the size of the symmetric group enumerated while
/// building; 0 selects the variant's default.
OverlapGraph build_transfer_graph(int k, TransferVariant variant, std::uint64_t max_candidates = 0);

/// Entry t is the number of walks with exactly t arcs, t = 0..max_arcs,
/// by repeated sparse vector-matrix products from the all-ones vector.
std::vector<BigInt> count_walks_by_length(const OverlapGraph& g, int max_arcs);

/// Walks with n-2k+1 arcs (node-based) or n-2k+2 arcs (arc-labelled). Below
/// that length the answer comes from count_bruteforce.
BigInt count_via_transfer(int k, int n, TransferVariant variant = TransferVariant::kNodeBased,
                          std::uint64_t max_candidates = 0);

struct SeriesOptions {
  /// Terms with n <= this are also computed by the Hamiltonian DP and
  /// compared with the transfer engines.
  int cross_check_max_n = 14;
  HamiltonianLimits hamiltonian{};
  std::uint64_t node_max_candidates = 0;
  std::uint64_t arc_max_candidates = 0;
};

/// A_{k,0..n_max}. Hamiltonian DP below 2k-1, transfer matrices from there
/// on (every variant within budget); overlapping entries must agree or
/// ConsistencyError is thrown.
CountTable series(int k, int n_max, const SeriesOptions& options = {});

}  // namespace ukd

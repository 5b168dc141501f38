#include "ukd/counting.hpp"

#include <string>

#include "ukd/determinacy.hpp"
#include "ukd/prohibitions.hpp"

namespace ukd {

BigInt count_exhaustive(int k, int n, int max_n) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > max_n) {
    throw ResourceLimit("exhaustive count over S_" + std::to_string(n) +
                        " exceeds the budget n <= " + std::to_string(max_n));
  }
  std::uint64_t total = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (is_uniquely_determined(p, k)) ++total;
  });
  return static_cast<unsigned long>(total);
}

BigInt count_bruteforce(int k, int n, HamiltonianLimits limits) {
  if (k < 1) throw InvalidInput("window length must be at least 1");
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n <= k) return big_factorial(n);
  return count_hamiltonian_paths(window_scheme(k, n), limits);
}

std::string_view to_string(TransferVariant variant) {
  return variant == TransferVariant::kNodeBased ? "node-based" : "arc-labeled";
}

namespace {

std::uint64_t default_candidates(TransferVariant variant) {
  return variant == TransferVariant::kNodeBased ? kDefaultNodeTransferMaxCandidates
                                                : kDefaultArcTransferMaxCandidates;
}

int first_transfer_length(int k, TransferVariant variant) {
  return variant == TransferVariant::kNodeBased ? 2 * k - 1 : 2 * k - 2;
}

bool within_budget(int k, std::uint64_t max_candidates) {
  const int longest = 2 * k - 1;
  return longest < kMaxKeyLength && longest <= 20 && factorial(longest) <= max_candidates;
}

}  // namespace

OverlapGraph build_transfer_graph(int k, TransferVariant variant, std::uint64_t max_candidates) {
  if (k < 2) throw InvalidInput("transfer graphs are defined for k >= 2");
  if (max_candidates == 0) max_candidates = default_candidates(variant);
  if (!within_budget(k, max_candidates)) {
    throw ResourceLimit(std::string(to_string(variant)) + " transfer graph for k=" +
                        std::to_string(k) + " enumerates " + std::to_string(2 * k - 1) +
                        "-permutations, beyond the budget of " + std::to_string(max_candidates) +
                        " candidates");
  }
  const ProhibitionSet prohibitions = generate_prohibitions(k, k);
  auto allowed = [&](const Permutation& p) { return !prohibitions.occurs_in(p); };
  if (variant == TransferVariant::kNodeBased) {
    return build_overlap_graph_if(2 * k - 1, allowed, max_candidates);
  }
  return label_arcs(build_overlap_graph_if(2 * k - 2, allowed, max_candidates), allowed);
}

std::vector<BigInt> count_walks_by_length(const OverlapGraph& g, int max_arcs) {
  if (max_arcs < 0) throw InvalidInput("arc count must be non-negative");
  std::vector<BigInt> totals;
  totals.reserve(static_cast<std::size_t>(max_arcs) + 1);
  std::vector<BigInt> ending(g.node_count(), 1);
  totals.emplace_back(static_cast<unsigned long>(g.node_count()));
  std::vector<BigInt> next(g.node_count());
  for (int t = 1; t <= max_arcs; ++t) {
    for (auto& x : next) x = 0;
    for (std::size_t u = 0; u < g.node_count(); ++u) {
      if (ending[u] == 0) continue;
      for (const auto& a : g.out_arcs(u)) next[a.target] += ending[u];
    }
    std::swap(ending, next);
    BigInt sum = 0;
    for (const auto& x : ending) sum += x;
    totals.push_back(std::move(sum));
  }
  return totals;
}

BigInt count_via_transfer(int k, int n, TransferVariant variant, std::uint64_t max_candidates) {
  if (k < 2) throw InvalidInput("transfer counting is defined for k >= 2");
  if (n < 0) throw InvalidInput("n must be non-negative");
  const int base = first_transfer_length(k, variant);
  if (n < base) return count_bruteforce(k, n);
  const OverlapGraph g = build_transfer_graph(k, variant, max_candidates);
  return count_walks_by_length(g, n - base).back();
}

CountTable series(int k, int n_max, const SeriesOptions& options) {
  if (k < 1) throw InvalidInput("window length must be at least 1");
  if (n_max < 0) throw InvalidInput("n_max must be non-negative");
  CountTable table{k, std::vector<BigInt>(static_cast<std::size_t>(n_max) + 1), {}};
  std::vector<bool> known(table.counts.size(), false);

  auto record = [&](int n, const BigInt& value, std::string_view engine) {
    auto idx = static_cast<std::size_t>(n);
    if (known[idx] && table.counts[idx] != value) {
      throw ConsistencyError("A_{" + std::to_string(k) + "," + std::to_string(n) + "}: " +
                             std::string(engine) + " gives " + value.get_str() +
                             " but an earlier engine gave " + table.counts[idx].get_str());
    }
    table.counts[idx] = value;
    known[idx] = true;
  };

  if (k >= 2) {
    for (auto variant : {TransferVariant::kNodeBased, TransferVariant::kArcLabeled}) {
      std::uint64_t budget = variant == TransferVariant::kNodeBased ? options.node_max_candidates
                                                                   : options.arc_max_candidates;
      if (budget == 0) budget = default_candidates(variant);
      const int base = first_transfer_length(k, variant);
      if (!within_budget(k, budget) || n_max < base) continue;
      const OverlapGraph g = build_transfer_graph(k, variant, budget);
      const auto walks = count_walks_by_length(g, n_max - base);
      for (int n = base; n <= n_max; ++n) {
        record(n, walks[static_cast<std::size_t>(n - base)], to_string(variant));
      }
      table.transfer_variants.push_back(variant);
    }
  }
  const bool any_transfer = !table.transfer_variants.empty();
  const int brute_until = any_transfer ? std::min(n_max, std::max(2 * k - 2, options.cross_check_max_n))
                                       : n_max;
  for (int n = 0; n <= brute_until; ++n) {
    record(n, count_bruteforce(k, n, options.hamiltonian), "hamiltonian");
  }
  return table;
}

}  // namespace ukd

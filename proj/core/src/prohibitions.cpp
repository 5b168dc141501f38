#include "ukd/prohibitions.hpp"

#include <algorithm>
#include <string>

#include "ukd/determinacy.hpp"
#include "ukd/path_scheme.hpp"

namespace ukd {

ProhibitionSet::ProhibitionSet(int k, std::vector<Permutation> patterns)
    : k_(k), patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end(), [](const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  lookup_ = patterns_;
  std::sort(lookup_.begin(), lookup_.end());
}

std::map<int, std::size_t> ProhibitionSet::by_length() const {
  std::map<int, std::size_t> counts;
  for (const auto& p : patterns_) ++counts[p.size()];
  return counts;
}

int ProhibitionSet::longest() const { return patterns_.empty() ? 0 : patterns_.back().size(); }

bool ProhibitionSet::contains(const Permutation& pattern) const {
  return std::binary_search(lookup_.begin(), lookup_.end(), pattern);
}

bool ProhibitionSet::occurs_in(const Permutation& p) const {
  if (patterns_.empty()) return false;
  const int shortest = patterns_.front().size();
  const int longest_len = std::min(longest(), p.size());
  for (int len = shortest; len <= longest_len; ++len) {
    for (int i = 1; i + len - 1 <= p.size(); ++i) {
      if (contains(factor_pattern(p, i, i + len - 1))) return true;
    }
  }
  return false;
}

bool is_irreducible(const Permutation& p, int k) {
  if (is_uniquely_determined(p, k)) {
    throw InvalidInput(to_string(p) + " is uniquely " + std::to_string(k) +
                       "-determined, so it is not a prohibition");
  }
  const int n = p.size();
  return is_uniquely_determined(factor_pattern(p, 1, n - 1), k) &&
         is_uniquely_determined(factor_pattern(p, 2, n), k);
}

ProhibitionSet generate_prohibitions(int k, int max_k) {
  if (k < 2) throw InvalidInput("prohibitions are defined for k >= 2");
  if (k > max_k) {
    throw ResourceLimit("generating prohibitions for k=" + std::to_string(k) +
                        " exceeds the budget k <= " + std::to_string(max_k));
  }
  std::vector<Permutation> found;
  for (int m = k + 1; m <= 2 * k - 1; ++m) {
    for_each_permutation(m, [&](const Permutation& p) {
      if (!is_uniquely_determined(p, k) && is_irreducible(p, k)) found.push_back(p);
    });
  }
  return ProhibitionSet(k, std::move(found));
}

std::optional<Violation> contains_prohibition(const Permutation& p, int k) {
  std::optional<Violation> best;
  int best_gap = 0;
  for (int x = 1; x < p.size(); ++x) {
    const int px = p.position_of(x);
    const int py = p.position_of(x + 1);
    const int gap = std::abs(px - py);
    if (gap >= k && (!best || gap < best_gap)) {
      best = Violation{x, px, py};
      best_gap = gap;
    }
  }
  return best;
}

int extension_witness(const Permutation& p, int k) {
  if (k < 2) throw InvalidInput("extension witness needs k >= 2");
  if (!is_uniquely_determined(p, k)) {
    throw InvalidInput(to_string(p) + " is not uniquely " + std::to_string(k) + "-determined");
  }
  const int n = p.size();
  if (n == 0) return 1;
  const int x = p[static_cast<std::size_t>(n - 1)];
  if (x == 1) return 1;
  if (x == n) return n + 1;
  // Both x-1 and x+1 sit within k-1 places of the last position, and at most
  // one of them can be exactly k-1 away, so one lies within k-2.
  if (distance(p, x - 1, x) <= k - 2) return x;
  if (distance(p, x + 1, x) <= k - 2) return x + 1;
  throw ConsistencyError("no close neighbour of the last entry of " + to_string(p));
}

std::optional<Permutation> find_crucial(int k, int n, int max_n) {
  if (k < 1) throw InvalidInput("window length must be at least 1");
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > max_n) {
    throw ResourceLimit("crucial search over n=" + std::to_string(n) +
                        " exceeds the exhaustive budget n <= " + std::to_string(max_n));
  }
  auto crucial = [&](const Permutation& p) {
    for (int v = 1; v <= p.size() + 1; ++v) {
      if (is_uniquely_determined(extend_right(p, v), k)) return false;
    }
    return true;
  };
  if (n == 0) {
    Permutation empty;
    if (crucial(empty)) return empty;
    return std::nullopt;
  }
  auto cursor = enumerate_hamiltonian_paths(window_scheme(k, n));
  while (auto path = cursor.next()) {
    Permutation p = phi_inverse(*path, k);
    if (crucial(p)) return p;
  }
  return std::nullopt;
}

}  // namespace ukd

#include "ukd/path_scheme.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "ukd/determinacy.hpp"

namespace ukd {

PathScheme::PathScheme(int n, std::vector<int> differences)
    : n_(n), differences_(std::move(differences)) {
  if (n < 1) throw InvalidInput("path scheme needs at least one node");
  std::sort(differences_.begin(), differences_.end());
  differences_.erase(std::unique(differences_.begin(), differences_.end()), differences_.end());
  allowed_.assign(static_cast<std::size_t>(n), false);
  for (int d : differences_) {
    if (d < 1 || d > n - 1) {
      throw InvalidInput("difference " + std::to_string(d) + " is outside 1.." +
                         std::to_string(n - 1));
    }
    allowed_[static_cast<std::size_t>(d)] = true;
  }
}

bool PathScheme::adjacent(int x, int y) const {
  const int d = std::abs(x - y);
  return x >= 1 && y >= 1 && x <= n_ && y <= n_ && d > 0 && allowed_[static_cast<std::size_t>(d)];
}

std::vector<int> PathScheme::neighbours(int x) const {
  std::vector<int> out;
  for (auto it = differences_.rbegin(); it != differences_.rend(); ++it) {
    if (x - *it >= 1) out.push_back(x - *it);
  }
  for (int d : differences_) {
    if (x + d <= n_) out.push_back(x + d);
  }
  return out;
}

std::vector<std::pair<int, int>> PathScheme::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= n_; ++x) {
    for (int d : differences_) {
      if (x + d <= n_) out.emplace_back(x, x + d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int PathScheme::max_degree() const {
  std::size_t best = 0;
  for (int x = 1; x <= n_; ++x) best = std::max(best, neighbours(x).size());
  return static_cast<int>(best);
}

PathScheme build_path_scheme(int n, std::span<const int> differences) {
  return PathScheme(n, std::vector<int>(differences.begin(), differences.end()));
}

PathScheme window_scheme(int k, int n) {
  if (k < 1) throw InvalidInput("window length must be at least 1");
  std::vector<int> differences;
  for (int d = 1; d <= std::min(k, n) - 1; ++d) differences.push_back(d);
  return PathScheme(n, std::move(differences));
}

namespace {

__extension__ typedef unsigned __int128 Count;

BigInt to_big(Count c) {
  BigInt high = static_cast<unsigned long>(static_cast<std::uint64_t>(c >> 64));
  BigInt low = static_cast<unsigned long>(static_cast<std::uint64_t>(c));
  return (high << 64) + low;
}

}  // namespace

BigInt count_hamiltonian_paths(const PathScheme& g, HamiltonianLimits limits) {
  const int n = g.size();
  if (n > limits.max_n || n > 26) {
    throw ResourceLimit("Hamiltonian path DP on " + std::to_string(n) +
                        " nodes exceeds the budget n <= " + std::to_string(limits.max_n));
  }
  // Node x (1-based) is bit x-1. State key: visited mask << 5 | endpoint.
  std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
  for (int x = 1; x <= n; ++x) {
    for (int y : g.neighbours(x)) adjacency[static_cast<std::size_t>(x - 1)] |= 1u << (y - 1);
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

  // A state is dead when some unvisited node can no longer be entered: all
  // its neighbours are visited and it is not next to the current endpoint.
  auto dead = [&](std::uint32_t mask, int end) {
    const std::uint32_t unvisited = full & ~mask;
    for (std::uint32_t rest = unvisited; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const std::uint32_t adj = adjacency[static_cast<std::size_t>(u)];
      if ((adj & unvisited) == 0 && ((adj >> end) & 1u) == 0) return true;
    }
    return false;
  };

  std::vector<std::pair<std::uint64_t, Count>> layer;
  for (int v = 0; v < n; ++v) {
    if (!dead(1u << v, v)) layer.emplace_back((std::uint64_t{1} << v) << 5 | static_cast<std::uint64_t>(v), 1);
  }
  std::vector<std::pair<std::uint64_t, Count>> next;
  for (int size = 1; size < n; ++size) {
    next.clear();
    for (const auto& [key, ways] : layer) {
      const auto mask = static_cast<std::uint32_t>(key >> 5);
      const int end = static_cast<int>(key & 31);
      for (std::uint32_t step = adjacency[static_cast<std::size_t>(end)] & ~mask; step;
           step &= step - 1) {
        const int w = std::countr_zero(step);
        const std::uint32_t grown = mask | (1u << w);
        if (dead(grown, w)) continue;
        next.emplace_back(static_cast<std::uint64_t>(grown) << 5 | static_cast<std::uint64_t>(w), ways);
      }
      if (next.size() > limits.max_states * 4) {
        throw ResourceLimit("Hamiltonian path DP exceeded " + std::to_string(limits.max_states) +
                            " live states at layer " + std::to_string(size + 1));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    layer.clear();
    for (const auto& [key, ways] : next) {
      if (!layer.empty() && layer.back().first == key) {
        layer.back().second += ways;
      } else {
        layer.emplace_back(key, ways);
      }
    }
    if (layer.size() > limits.max_states) {
      throw ResourceLimit("Hamiltonian path DP exceeded " + std::to_string(limits.max_states) +
                          " live states at layer " + std::to_string(size + 1));
    }
  }
  Count total = 0;
  for (const auto& entry : layer) total += entry.second;
  return to_big(total);
}

HamiltonianPathCursor::HamiltonianPathCursor(const PathScheme& g)
    : n_(g.size()), visited_(static_cast<std::size_t>(g.size()) + 1, false) {
  adjacency_.resize(static_cast<std::size_t>(n_) + 1);
  for (int x = 1; x <= n_; ++x) adjacency_[static_cast<std::size_t>(x)] = g.neighbours(x);
}

std::optional<std::vector<int>> HamiltonianPathCursor::next() {
  auto push = [&](int x) {
    path_.push_back(x);
    cursor_.push_back(0);
    visited_[static_cast<std::size_t>(x)] = true;
  };
  auto pop = [&] {
    visited_[static_cast<std::size_t>(path_.back())] = false;
    path_.pop_back();
    cursor_.pop_back();
  };
  if (emitted_) {
    pop();
    emitted_ = false;
  }
  while (true) {
    if (path_.empty()) {
      if (next_start_ > n_) return std::nullopt;
      push(next_start_++);
    }
    if (static_cast<int>(path_.size()) == n_) {
      emitted_ = true;
      return path_;
    }
    const auto& around = adjacency_[static_cast<std::size_t>(path_.back())];
    std::size_t& c = cursor_.back();
    while (c < around.size() && visited_[static_cast<std::size_t>(around[c])]) ++c;
    if (c < around.size()) {
      const int step = around[c++];
      push(step);
    } else {
      pop();
    }
  }
}

HamiltonianPathCursor enumerate_hamiltonian_paths(const PathScheme& g) {
  return HamiltonianPathCursor(g);
}

std::vector<int> phi(const Permutation& p, int k) {
  if (!is_uniquely_determined(p, k)) {
    throw InvalidInput(to_string(p) + " is not uniquely " + std::to_string(k) + "-determined");
  }
  const Permutation q = inverse(p);
  return {q.begin(), q.end()};
}

Permutation phi_inverse(std::span<const int> path, int k) {
  Permutation as_word{std::vector<int>(path.begin(), path.end())};
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    if (std::abs(path[t] - path[t + 1]) > k - 1) {
      throw InvalidInput("step " + std::to_string(path[t]) + " -> " +
                         std::to_string(path[t + 1]) + " is not an edge of G_{" +
                         std::to_string(k) + "," + std::to_string(path.size()) + "}");
    }
  }
  return inverse(as_word);
}

CountBounds bounds(int k, int n) {
  if (k < 2 || n < 2 * k - 1) {
    throw InvalidInput("bounds need k >= 2 and n >= 2k-1 (got k=" + std::to_string(k) +
                       ", n=" + std::to_string(n) + ")");
  }
  BigInt lower;
  mpz_pow_ui(lower.get_mpz_t(), big_factorial(k - 1).get_mpz_t(),
             static_cast<unsigned long>(n / k));
  BigInt upper;
  mpz_ui_pow_ui(upper.get_mpz_t(), static_cast<unsigned long>(2 * (k - 1)),
                static_cast<unsigned long>(n));
  return {2 * lower, 2 * upper};
}

}  // namespace ukd

#include "ukd/determinacy.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace ukd {

bool WindowPath::satisfies_overlap() const {
  for (const auto& node : nodes) {
    if (node.size() != k) return false;
  }
  for (std::size_t t = 0; t + 1 < nodes.size(); ++t) {
    if (factor_pattern(nodes[t], 2, k) != factor_pattern(nodes[t + 1], 1, k - 1)) {
      return false;
    }
  }
  return true;
}

WindowPath window_path(const Permutation& p, int k) {
  if (k < 1 || k > p.size()) {
    throw InvalidInput("window length " + std::to_string(k) +
                       " must lie in 1.." + std::to_string(p.size()));
  }
  WindowPath path{k, {}};
  path.nodes.reserve(static_cast<std::size_t>(p.size() - k + 1));
  for (int i = 1; i + k - 1 <= p.size(); ++i) {
    path.nodes.push_back(factor_pattern(p, i, i + k - 1));
  }
  return path;
}

bool is_uniquely_determined(const Permutation& p, int k) {
  for (int x = 1; x < p.size(); ++x) {
    if (distance(p, x, x + 1) > k - 1) return false;
  }
  return true;
}

bool is_uniquely_determined_via_inverse(const Permutation& p, int k) {
  const Permutation q = inverse(p);
  for (std::size_t t = 0; t + 1 < q.values().size(); ++t) {
    if (std::abs(q[t] - q[t + 1]) > k - 1) return false;
  }
  return true;
}

int ir_index(const Permutation& p) {
  if (p.size() <= 1) return 1;
  const Permutation q = inverse(p);
  int widest = 0;
  for (std::size_t t = 0; t + 1 < q.values().size(); ++t) {
    widest = std::max(widest, std::abs(q[t] - q[t + 1]));
  }
  return widest + 1;
}

IRHistogram ir_distribution(int n, int max_n) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > max_n) {
    throw ResourceLimit("ir distribution over S_" + std::to_string(n) +
                        " exceeds the exhaustive budget n <= " + std::to_string(max_n));
  }
  IRHistogram histogram{n, {}};
  for_each_permutation(n, [&](const Permutation& p) { ++histogram.counts[ir_index(p)]; });
  return histogram;
}

namespace {

// Values left in the middle (all but a, b) against the values the middle must
// use (all but i, j). Shared values stay put; the rest pair up in role order.
std::vector<std::pair<int, int>> relabelling(int a, int b, int i, int j) {
  auto outside = [](int v, int u, int w) { return v != u && v != w; };
  std::vector<int> from;
  std::vector<int> to;
  for (int v : {i, j}) {
    if (outside(v, a, b)) from.push_back(v);
  }
  for (int v : {a, b}) {
    if (outside(v, i, j)) to.push_back(v);
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t t = 0; t < from.size(); ++t) pairs.emplace_back(from[t], to[t]);
  return pairs;
}

int apply(const std::vector<std::pair<int, int>>& pairs, int v, bool forward) {
  for (auto [from, to] : pairs) {
    if (forward && v == from) return to;
    if (!forward && v == to) return from;
  }
  return v;
}

}  // namespace

Permutation key_bijection(const Permutation& p, int a, int b) {
  const int n = p.size();
  if (n < 2 || a == b || a < 1 || b < 1 || a > n || b > n) {
    throw InvalidInput("key bijection needs two distinct values of the permutation");
  }
  const int i = p.position_of(a);
  const int j = p.position_of(b);
  if (std::abs(i - j) < 2) {
    throw InvalidInput("values " + std::to_string(a) + " and " + std::to_string(b) +
                       " are adjacent");
  }
  const auto pairs = relabelling(a, b, i, j);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(i);
  for (int v : p) {
    if (v != a && v != b) out.push_back(apply(pairs, v, true));
  }
  out.push_back(j);
  return Permutation(std::move(out));
}

Permutation key_bijection_inverse(const Permutation& image, int a, int b) {
  const int n = image.size();
  if (n < 2 || a == b || a < 1 || b < 1 || a > n || b > n) {
    throw InvalidInput("key bijection needs two distinct values in 1..n");
  }
  const int i = image[0];
  const int j = image[static_cast<std::size_t>(n - 1)];
  if (std::abs(i - j) < 2) {
    throw InvalidInput("image " + to_string(image) +
                       " has consecutive end values and is outside the bijection's range");
  }
  const auto pairs = relabelling(a, b, i, j);
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  out[static_cast<std::size_t>(i - 1)] = a;
  out[static_cast<std::size_t>(j - 1)] = b;
  std::size_t slot = 0;
  for (int t = 1; t + 1 < n; ++t) {
    while (out[slot] != 0) ++slot;
    out[slot] = apply(pairs, image[static_cast<std::size_t>(t)], false);
  }
  return Permutation(std::move(out));
}

}  // namespace ukd

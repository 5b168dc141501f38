#include "ukd/overlap_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ukd/posets.hpp"

namespace ukd {

namespace {

// The m successors of an m-permutation in the full P_m, as raw value lists.
std::vector<std::vector<int>> successor_values(std::span<const int> node) {
  const Permutation suffix = reduce_pattern(node.subspan(1));
  const int m = static_cast<int>(node.size());
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int v = 1; v <= m; ++v) {
    std::vector<int> next;
    next.reserve(static_cast<std::size_t>(m));
    for (int s : suffix) next.push_back(s >= v ? s + 1 : s);
    next.push_back(v);
    out.push_back(std::move(next));
  }
  return out;
}

void check_pattern_length(int m, std::uint64_t max_candidates) {
  if (m < 1) throw InvalidInput("pattern length must be at least 1");
  if (m >= kMaxKeyLength || m > 20 || factorial(m) > max_candidates) {
    throw ResourceLimit("overlap graph on " + std::to_string(m) +
                        "-permutations exceeds the budget of " +
                        std::to_string(max_candidates) + " candidate nodes");
  }
}

}  // namespace

std::optional<std::size_t> OverlapGraph::find(const Permutation& p) const {
  if (p.size() != m_) return std::nullopt;
  const PatternKey key = pack(p);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

OverlapGraph build_overlap_graph_if(int m,
                                    const std::function<bool(const Permutation&)>& keep_node,
                                    std::uint64_t max_candidates) {
  check_pattern_length(m, max_candidates);
  OverlapGraph g;
  g.m_ = m;
  for_each_permutation(m, [&](const Permutation& p) {
    if (keep_node(p)) g.keys_.push_back(pack(p));
  });
  g.offsets_.reserve(g.keys_.size() + 1);
  g.arcs_.reserve(g.keys_.size() * static_cast<std::size_t>(m));
  std::vector<std::uint32_t> targets;
  for (PatternKey key : g.keys_) {
    targets.clear();
    for (const auto& next : successor_values(unpack_values(key, m))) {
      const PatternKey next_key = pack(next);
      auto it = std::lower_bound(g.keys_.begin(), g.keys_.end(), next_key);
      if (it != g.keys_.end() && *it == next_key) {
        targets.push_back(static_cast<std::uint32_t>(it - g.keys_.begin()));
      }
    }
    std::sort(targets.begin(), targets.end());
    for (auto t : targets) g.arcs_.push_back({t, 0});
    g.offsets_.push_back(static_cast<std::uint32_t>(g.arcs_.size()));
  }
  return g;
}

OverlapGraph build_overlap_graph(int m, std::span<const Permutation> excluded,
                                 std::uint64_t max_candidates) {
  std::vector<PatternKey> dropped;
  for (const auto& p : excluded) {
    if (p.size() != m) {
      throw InvalidInput("excluded node " + to_string(p) + " is not an " + std::to_string(m) +
                         "-permutation");
    }
    dropped.push_back(pack(p));
  }
  std::sort(dropped.begin(), dropped.end());
  return build_overlap_graph_if(
      m,
      [&](const Permutation& p) {
        return !std::binary_search(dropped.begin(), dropped.end(), pack(p));
      },
      max_candidates);
}

std::vector<Permutation> arc_labels(const Permutation& from, const Permutation& to) {
  const int m = from.size();
  if (to.size() != m || m < 1) throw InvalidInput("arc endpoints must have equal positive length");
  std::vector<Permutation> labels;
  for (int v = 1; v <= m + 1; ++v) {
    Permutation candidate = extend_right(from, v);
    if (factor_pattern(candidate, 2, m + 1) == to) labels.push_back(std::move(candidate));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

OverlapGraph label_arcs(const OverlapGraph& g,
                        const std::function<bool(const Permutation&)>& keep_label) {
  if (g.labelled()) throw InvalidInput("graph is already labelled");
  if (g.pattern_length() + 1 > kMaxKeyLength) {
    throw ResourceLimit("arc labels longer than " + std::to_string(kMaxKeyLength) +
                        " are not supported");
  }
  OverlapGraph out;
  out.m_ = g.m_;
  out.labelled_ = true;
  out.keys_ = g.keys_;
  out.offsets_.reserve(g.keys_.size() + 1);
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    const Permutation from = g.node(u);
    for (const auto& a : g.out_arcs(u)) {
      for (const auto& label : arc_labels(from, g.node(a.target))) {
        if (keep_label(label)) out.arcs_.push_back({a.target, pack(label)});
      }
    }
    out.offsets_.push_back(static_cast<std::uint32_t>(out.arcs_.size()));
  }
  return out;
}

WalkCursor::WalkCursor(const OverlapGraph& g, int arc_count)
    : graph_(&g), target_arcs_(static_cast<std::size_t>(std::max(arc_count, 0))) {
  if (arc_count < 0) throw InvalidInput("arc count must be non-negative");
}

void WalkCursor::pop() {
  nodes_.pop_back();
  cursor_.pop_back();
  if (!arcs_.empty() && arcs_.size() == nodes_.size()) arcs_.pop_back();
}

std::optional<Walk> WalkCursor::next() {
  if (emitted_) {
    pop();
    emitted_ = false;
  }
  while (true) {
    if (nodes_.empty()) {
      if (next_start_ == graph_->node_count()) return std::nullopt;
      nodes_.push_back(next_start_++);
      cursor_.push_back(0);
    }
    if (arcs_.size() == target_arcs_) {
      emitted_ = true;
      return Walk{nodes_, arcs_};
    }
    const std::size_t here = nodes_.back();
    const auto out = graph_->out_arcs(here);
    std::size_t& c = cursor_.back();
    if (c < out.size()) {
      const std::size_t arc_index = graph_->arc_begin(here) + c;
      ++c;
      nodes_.push_back(out[arc_index - graph_->arc_begin(here)].target);
      arcs_.push_back(arc_index);
      cursor_.push_back(0);
    } else {
      pop();
    }
  }
}

WalkCursor enumerate_paths(const OverlapGraph& g, int arc_count) { return WalkCursor(g, arc_count); }

WindowPath to_window_path(const OverlapGraph& g, const Walk& walk) {
  WindowPath path{g.pattern_length(), {}};
  path.nodes.reserve(walk.nodes.size());
  for (auto index : walk.nodes) path.nodes.push_back(g.node(index));
  return path;
}

namespace {

// Position order forced by the windows: position a below position b when the
// window covering both ranks a lower.
std::optional<Poset> position_poset(const WindowPath& path) {
  if (path.nodes.empty()) throw InvalidInput("window path has no nodes");
  if (!path.satisfies_overlap()) {
    throw InvalidInput("window path violates the overlap rule");
  }
  const int k = path.k;
  std::vector<std::pair<int, int>> relations;
  for (std::size_t t = 0; t < path.nodes.size(); ++t) {
    const auto& node = path.nodes[t];
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        const int pa = static_cast<int>(t) + a + 1;
        const int pb = static_cast<int>(t) + b + 1;
        if (node[static_cast<std::size_t>(a)] < node[static_cast<std::size_t>(b)]) {
          relations.emplace_back(pa, pb);
        } else {
          relations.emplace_back(pb, pa);
        }
      }
    }
  }
  return Poset::from_relations(path.permutation_length(), relations);
}

}  // namespace

std::vector<Permutation> realize_path(const WindowPath& path) {
  const auto order = position_poset(path);
  std::vector<Permutation> out;
  if (!order) return out;
  const int n = order->size();
  for_each_linear_extension(*order, [&](std::span<const int> bottom_to_top) {
    std::vector<int> values(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < bottom_to_top.size(); ++r) {
      values[static_cast<std::size_t>(bottom_to_top[r] - 1)] = static_cast<int>(r) + 1;
    }
    out.push_back(unchecked_permutation(std::move(values)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt realization_count(const WindowPath& path) {
  const auto order = position_poset(path);
  if (!order) return 0;
  return count_linear_extensions(*order);
}

bool reachable(const OverlapGraph& g, const Permutation& u, const Permutation& v) {
  const auto from = g.find(u);
  const auto to = g.find(v);
  if (!from) throw InvalidInput(to_string(u) + " is not a node of the graph");
  if (!to) throw InvalidInput(to_string(v) + " is not a node of the graph");
  std::vector<bool> seen(g.node_count(), false);
  std::deque<std::size_t> queue{*from};
  seen[*from] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (x == *to) return true;
    for (const auto& a : g.out_arcs(x)) {
      if (!seen[a.target]) {
        seen[a.target] = true;
        queue.push_back(a.target);
      }
    }
  }
  return false;
}

std::size_t strongly_connected_components(const OverlapGraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.node_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // node, next arc offset
  std::size_t counter = 0;
  std::size_t components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == kUnvisited) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      const auto out = g.out_arcs(v);
      if (next < out.size()) {
        const std::size_t w = out[next++].target;
        if (index[w] == kUnvisited) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != v);
        ++components;
      }
      const std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return components;
}

std::string export_dot(const OverlapGraph& g) {
  std::ostringstream out;
  out << "digraph P" << g.pattern_length() << " {\n";
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    out << "  \"" << to_string(g.node(u)) << "\";\n";
  }
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    const std::string from = to_string(g.node(u));
    for (const auto& a : g.out_arcs(u)) {
      out << "  \"" << from << "\" -> \"" << to_string(g.node(a.target)) << "\"";
      if (g.labelled()) out << " [label=\"" << to_string(g.label(a)) << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ukd

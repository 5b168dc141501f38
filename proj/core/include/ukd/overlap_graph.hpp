#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ukd/determinacy.hpp"
#include "ukd/pattern_key.hpp"
#include "ukd/permutation.hpp"

namespace ukd {

/// The graph of pattern overlaps on m-permutations: an arc a -> b exists iff
/// a_2..a_m and b_1..b_{m-1} reduce to the same pattern. Nodes are kept in
/// lexicographic order and addressed by index; adjacency is CSR.
///
/// A labelled graph is a multigraph whose arcs each carry the
/// (m+1)-permutation that realises the overlap, so one node pair can have
/// several arcs.
class OverlapGraph {
 public:
  struct Arc {
    std::uint32_t target;
    PatternKey label;  // meaningful only when labelled()
  };

  int pattern_length() const { return m_; }
  std::size_t node_count() const { return keys_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  bool labelled() const { return labelled_; }

  Permutation node(std::size_t index) const { return unpack(keys_[index], m_); }
  PatternKey node_key(std::size_t index) const { return keys_[index]; }
  std::optional<std::size_t> find(const Permutation& p) const;

  std::span<const Arc> out_arcs(std::size_t index) const {
    return std::span<const Arc>(arcs_).subspan(offsets_[index],
                                               offsets_[index + 1] - offsets_[index]);
  }
  /// Global index of the first arc leaving `index`.
  std::size_t arc_begin(std::size_t index) const { return offsets_[index]; }
  const Arc& arc(std::size_t arc_index) const { return arcs_[arc_index]; }
  Permutation label(const Arc& a) const { return unpack(a.label, m_ + 1); }

 private:
  friend OverlapGraph build_overlap_graph_if(int, const std::function<bool(const Permutation&)>&,
                                             std::uint64_t);
  friend OverlapGraph label_arcs(const OverlapGraph&,
                                 const std::function<bool(const Permutation&)>&);

  int m_ = 0;
  bool labelled_ = false;
  std::vector<PatternKey> keys_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Arc> arcs_;
};

/// P_m restricted to the nodes for which keep_node is true, with every
/// overlap arc between kept nodes. Throws ResourceLimit when m! exceeds
/// max_candidates.
OverlapGraph build_overlap_graph_if(int m, const std::function<bool(const Permutation&)>& keep_node,
                                    std::uint64_t max_candidates = kDefaultGraphMaxCandidates);

/// P_m minus `excluded` (and the arcs touching them).
OverlapGraph build_overlap_graph(int m, std::span<const Permutation> excluded = {},
                                 std::uint64_t max_candidates = kDefaultGraphMaxCandidates);

/// All (m+1)-permutations whose first m entries reduce to `from` and last m
/// entries reduce to `to`, in lexicographic order.
std::vector<Permutation> arc_labels(const Permutation& from, const Permutation& to);

/// Replaces every arc of an unlabelled graph by one arc per label that
/// passes keep_label.
OverlapGraph label_arcs(const OverlapGraph& g,
                        const std::function<bool(const Permutation&)>& keep_label);

/// A directed walk: node indices and the global indices of the arcs taken.
struct Walk {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> arcs;
};

/// Lazily yields every walk with a fixed number of arcs, ordered
/// lexicographically by node sequence (then by arc label).
class WalkCursor {
 public:
  WalkCursor(const OverlapGraph& g, int arc_count);
  std::optional<Walk> next();

 private:
  void pop();

  const OverlapGraph* graph_;
  std::size_t target_arcs_;
  std::size_t next_start_ = 0;
  bool emitted_ = false;
  std::vector<std::size_t> nodes_;
  std::vector<std::size_t> arcs_;
  std::vector<std::size_t> cursor_;
};

WalkCursor enumerate_paths(const OverlapGraph& g, int arc_count);

WindowPath to_window_path(const OverlapGraph& g, const Walk& walk);

/// Every permutation whose window path is `path`, sorted. Empty when the
/// order relations the windows impose are cyclic (unrealizable walk).
std::vector<Permutation> realize_path(const WindowPath& path);

/// Size of realize_path(path), without listing the members.
BigInt realization_count(const WindowPath& path);

bool reachable(const OverlapGraph& g, const Permutation& u, const Permutation& v);

std::size_t strongly_connected_components(const OverlapGraph& g);

/// DOT digraph; nodes named by their compact strings, labelled arcs carry
/// their label. Deterministic.
std::string export_dot(const OverlapGraph& g);

}  // namespace ukd

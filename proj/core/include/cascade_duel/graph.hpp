#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cascade_duel {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in CSR form. Node ids are contiguous
/// 0..n-1; the id each node had in its source (file, parent graph) is kept in
/// `original_id`.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list over nodes 0..node_count-1.
  /// Self-loops and duplicates (in either orientation) are dropped.
  /// `original_ids`, when given, must have node_count entries.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<std::int64_t> original_ids = {});

  std::size_t node_count() const noexcept { return original_ids_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  bool empty() const noexcept { return node_count() == 0; }

  /// Sorted ascending.
  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;
  bool contains(NodeId v) const noexcept { return v < node_count(); }

  /// Each undirected edge once, as (u, v) with u < v, lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;
  double average_degree() const;

  std::int64_t original_id(NodeId v) const { return original_ids_[v]; }
  const std::vector<std::int64_t>& original_ids() const noexcept { return original_ids_; }
  /// Reverse lookup of `original_id`. Linear unless ids are sorted.
  std::optional<NodeId> find_node(std::int64_t original) const;

  /// Induced subgraph on `keep` (any order). Node i of the result is keep[i]
  /// sorted ascending; original ids carry over.
  Graph induced(std::span<const NodeId> keep) const;

 private:
  void check_invariants() const;

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<std::int64_t> original_ids_;
  bool ids_sorted_ = true;
};

/// Hop levels from a set of roots with some nodes deleted.
struct LevelAssignment {
  std::vector<NodeId> roots;
  std::vector<std::optional<std::uint32_t>> level_of;
  /// levels[d] holds the nodes at distance d, ascending.
  std::vector<std::vector<NodeId>> levels;

  std::size_t depth() const noexcept { return levels.size(); }
  bool reached(NodeId v) const { return level_of[v].has_value(); }
};

/// BFS ignoring `removed` nodes. Throws std::invalid_argument for an invalid
/// root or a root that is itself removed.
LevelAssignment bfs_levels(const Graph& g, NodeId root, std::span<const NodeId> removed = {});
LevelAssignment bfs_levels(const Graph& g, std::span<const NodeId> roots,
                           std::span<const NodeId> removed = {});

/// Connected components; component[v] is a dense label, 0 = largest
/// component (ties: the one containing the smallest node id).
struct Components {
  std::vector<std::uint32_t> component;
  std::vector<std::size_t> sizes;
};
Components connected_components(const Graph& g);
std::vector<NodeId> largest_component_nodes(const Graph& g);

}  // namespace cascade_duel

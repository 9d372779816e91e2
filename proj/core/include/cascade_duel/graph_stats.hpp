#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cascade_duel/graph.hpp"

namespace cascade_duel {

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_degree = 0.0;
  /// Mean of local clustering over all nodes; nodes with degree < 2 count as 0.
  double avg_clustering = 0.0;
  std::uint64_t triangles = 0;
  /// Exact, on the largest connected component.
  std::uint32_t diameter = 0;
  std::size_t largest_component_nodes = 0;
  std::size_t largest_component_edges = 0;
};

/// `workers` = 0 uses std::thread::hardware_concurrency().
GraphStats compute_stats(const Graph& g, unsigned workers = 0);

std::vector<double> local_clustering(const Graph& g);
/// Triangles through each node.
std::vector<std::uint64_t> node_triangles(const Graph& g);
std::uint32_t eccentricity(const Graph& g, NodeId source);

}  // namespace cascade_duel

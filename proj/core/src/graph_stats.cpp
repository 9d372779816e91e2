#include "cascade_duel/graph_stats.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cascade_duel/error.hpp"

namespace cascade_duel {

std::vector<std::uint64_t> node_triangles(const Graph& g) {
  std::vector<std::uint64_t> count(g.node_count(), 0);
  // Each triangle u < v < w is found once, from its lowest edge (u, v).
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++count[u];
          ++count[v];
          ++count[*a];
          ++a;
          ++b;
        }
      }
    }
  }
  return count;
}

std::vector<double> local_clustering(const Graph& g) {
  auto tri = node_triangles(g);
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2) out[v] = 2.0 * static_cast<double>(tri[v]) / (d * (d - 1.0));
  }
  return out;
}

std::uint32_t eccentricity(const Graph& g, NodeId source) {
  auto levels = bfs_levels(g, source);
  return static_cast<std::uint32_t>(levels.depth() - 1);
}

namespace {

std::uint32_t component_diameter(const Graph& g, const std::vector<NodeId>& nodes,
                                 unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, nodes.size()));
  if (workers <= 1) {
    std::uint32_t best = 0;
    for (NodeId s : nodes) best = std::max(best, eccentricity(g, s));
    return best;
  }
  std::vector<std::uint32_t> partial(workers, 0);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = next++; k < nodes.size(); k = next++) {
          partial[w] = std::max(partial[w], eccentricity(g, nodes[k]));
        }
      });
    }
  }
  return *std::max_element(partial.begin(), partial.end());
}

}  // namespace

GraphStats compute_stats(const Graph& g, unsigned workers) {
  if (g.empty()) throw EmptyGraphError("compute_stats: graph has no nodes");
  GraphStats s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.avg_degree = g.average_degree();

  auto tri = node_triangles(g);
  std::uint64_t tri_sum = 0;
  double clustering_sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    tri_sum += tri[v];
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2) clustering_sum += 2.0 * static_cast<double>(tri[v]) / (d * (d - 1.0));
  }
  s.triangles = tri_sum / 3;
  s.avg_clustering = clustering_sum / static_cast<double>(s.nodes);

  auto lcc = largest_component_nodes(g);
  s.largest_component_nodes = lcc.size();
  std::size_t lcc_degree = 0;
  for (NodeId v : lcc) lcc_degree += g.degree(v);
  s.largest_component_edges = lcc_degree / 2;
  // Eccentricities inside the component equal those in g: BFS never leaves it.
  s.diameter = component_diameter(g, lcc, workers);
  return s;
}

}  // namespace cascade_duel

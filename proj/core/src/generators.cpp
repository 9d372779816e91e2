#include "cascade_duel/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cascade_duel/error.hpp"
#include "cascade_duel/rng.hpp"

namespace cascade_duel {

Graph gen_er(std::size_t n, double avg_degree, std::uint64_t rng_seed) {
  if (n < 2) throw std::invalid_argument("gen_er: need at least 2 nodes");
  const double max_degree = static_cast<double>(n - 1);
  if (!(avg_degree > 0.0) || avg_degree > max_degree || !std::isfinite(avg_degree)) {
    throw std::invalid_argument("gen_er: avg_degree must lie in (0, n-1], got " +
                                std::to_string(avg_degree));
  }
  const double p = avg_degree / max_degree;
  Rng rng(rng_seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(avg_degree * static_cast<double>(n) / 2.0 * 1.1) + 16);

  if (p >= 1.0) {
    for (NodeId v = 1; v < n; ++v) {
      for (NodeId w = 0; w < v; ++w) edges.emplace_back(w, v);
    }
    return Graph::from_edges(n, edges);
  }

  // Geometric skipping over the pairs (w, v), w < v, in row order.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return Graph::from_edges(n, edges);
}

namespace {

bool adjacent(const std::vector<std::vector<NodeId>>& adj, NodeId u, NodeId v) {
  const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
  const NodeId other = adj[u].size() <= adj[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

}  // namespace

Graph gen_regular(std::size_t n, std::size_t degree, std::uint64_t rng_seed) {
  if (n == 0) throw std::invalid_argument("gen_regular: need at least one node");
  if (degree >= n) {
    throw InfeasibleError("gen_regular: degree " + std::to_string(degree) +
                          " must be below n = " + std::to_string(n));
  }
  if ((n * degree) % 2 != 0) {
    throw InfeasibleError("gen_regular: n * degree must be even (n = " + std::to_string(n) +
                          ", degree = " + std::to_string(degree) + ")");
  }
  if (degree == 0) return Graph::from_edges(n, {});

  Rng rng(rng_seed);
  constexpr int kMaxRestarts = 1000;
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    std::vector<NodeId> points;
    points.reserve(n * degree);
    for (NodeId v = 0; v < n; ++v) points.insert(points.end(), degree, v);
    std::vector<std::vector<NodeId>> adj(n);
    for (auto& a : adj) a.reserve(degree);
    std::vector<Edge> edges;
    edges.reserve(n * degree / 2);

    auto take = [&](std::size_t i, std::size_t j) {
      NodeId u = points[i], v = points[j];
      adj[u].push_back(v);
      adj[v].push_back(u);
      edges.emplace_back(u, v);
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    };

    bool stuck = false;
    std::size_t failures = 0;
    while (!points.empty()) {
      const std::size_t m = points.size();
      const std::size_t i = rng.below(m);
      const std::size_t j = rng.below(m);
      if (i != j && points[i] != points[j] && !adjacent(adj, points[i], points[j])) {
        take(i, j);
        failures = 0;
        continue;
      }
      if (++failures < 32 + m) continue;
      // Random probing keeps failing: enumerate what is still admissible.
      std::vector<std::pair<std::size_t, std::size_t>> admissible;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          if (points[a] != points[b] && !adjacent(adj, points[a], points[b])) {
            admissible.emplace_back(a, b);
          }
        }
      }
      if (admissible.empty()) {
        stuck = true;
        break;
      }
      auto [a, b] = admissible[rng.below(admissible.size())];
      take(a, b);
      failures = 0;
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  throw Error("gen_regular: pairing kept getting stuck after " + std::to_string(kMaxRestarts) +
              " restarts");
}

Graph spanning_tree(const Graph& g, std::uint64_t rng_seed) {
  if (g.empty()) throw EmptyGraphError("spanning_tree: graph has no nodes");
  auto lcc = largest_component_nodes(g);
  Graph sub;
  const Graph* base = &g;
  if (lcc.size() != g.node_count()) {
    warn("spanning_tree: graph is disconnected; using the largest component (" +
         std::to_string(lcc.size()) + " of " + std::to_string(g.node_count()) + " nodes)");
    sub = g.induced(lcc);
    base = &sub;
  }
  Rng rng(rng_seed);
  const auto root = static_cast<NodeId>(rng.below(base->node_count()));

  std::vector<char> seen(base->node_count(), 0);
  std::vector<Edge> tree;
  tree.reserve(base->node_count() - 1);
  std::vector<NodeId> frontier{root};
  seen[root] = 1;
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId v : base->neighbors(u)) {
        if (seen[v]) continue;
        seen[v] = 1;
        tree.emplace_back(u, v);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return Graph::from_edges(base->node_count(), tree, base->original_ids());
}

}  // namespace cascade_duel

#include "cascade_duel/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cascade_duel/error.hpp"

namespace cascade_duel {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::int64_t> original_ids) {
  if (original_ids.empty()) {
    original_ids.resize(node_count);
    std::iota(original_ids.begin(), original_ids.end(), std::int64_t{0});
  } else if (original_ids.size() != node_count) {
    throw std::invalid_argument("Graph::from_edges: original_ids size mismatch");
  }

  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw std::invalid_argument("Graph::from_edges: edge endpoint out of range");
    }
    if (u == v) continue;
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  Graph g;
  g.original_ids_ = std::move(original_ids);
  g.ids_sorted_ = std::is_sorted(g.original_ids_.begin(), g.original_ids_.end());
  g.offsets_.assign(node_count + 1, 0);
  for (auto [u, v] : canonical) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * canonical.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canonical is sorted by (u, v): lower neighbours first, then higher ones,
  // leaves every list ascending.
  for (auto [u, v] : canonical) g.neighbors_[cursor[v]++] = u;
  for (auto [u, v] : canonical) g.neighbors_[cursor[u]++] = v;
  g.check_invariants();
  return g;
}

void Graph::check_invariants() const {
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < node_count(); ++v) {
    auto nb = neighbors(v);
    degree_sum += nb.size();
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] == v) throw Error("graph invariant violated: self-loop at " + std::to_string(v));
      if (k > 0 && nb[k] <= nb[k - 1]) {
        throw Error("graph invariant violated: duplicate or unsorted neighbour at " +
                    std::to_string(v));
      }
      if (!has_edge(nb[k], v)) {
        throw Error("graph invariant violated: asymmetric adjacency at " + std::to_string(v));
      }
    }
  }
  if (degree_sum != neighbors_.size() || degree_sum % 2 != 0) {
    throw Error("graph invariant violated: degree sum != 2|E|");
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(node_count());
  for (NodeId v = 0; v < node_count(); ++v) out[v] = degree(v);
  return out;
}

double Graph::average_degree() const {
  if (empty()) return 0.0;
  return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(node_count());
}

std::optional<NodeId> Graph::find_node(std::int64_t original) const {
  if (ids_sorted_) {
    auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), original);
    if (it != original_ids_.end() && *it == original) {
      return static_cast<NodeId>(it - original_ids_.begin());
    }
    return std::nullopt;
  }
  auto it = std::find(original_ids_.begin(), original_ids_.end(), original);
  if (it == original_ids_.end()) return std::nullopt;
  return static_cast<NodeId>(it - original_ids_.begin());
}

Graph Graph::induced(std::span<const NodeId> keep) const {
  std::vector<NodeId> nodes(keep.begin(), keep.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> remap(node_count(), kAbsent);
  std::vector<std::int64_t> ids(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!contains(nodes[i])) throw std::invalid_argument("Graph::induced: node out of range");
    remap[nodes[i]] = static_cast<NodeId>(i);
    ids[i] = original_ids_[nodes[i]];
  }
  std::vector<Edge> kept;
  for (NodeId u : nodes) {
    for (NodeId v : neighbors(u)) {
      if (u < v && remap[v] != kAbsent) kept.emplace_back(remap[u], remap[v]);
    }
  }
  return from_edges(nodes.size(), kept, std::move(ids));
}

LevelAssignment bfs_levels(const Graph& g, NodeId root, std::span<const NodeId> removed) {
  const NodeId roots[] = {root};
  return bfs_levels(g, roots, removed);
}

LevelAssignment bfs_levels(const Graph& g, std::span<const NodeId> roots,
                           std::span<const NodeId> removed) {
  const std::size_t n = g.node_count();
  std::vector<char> blocked(n, 0);
  for (NodeId r : removed) {
    if (!g.contains(r)) throw std::invalid_argument("bfs_levels: removed node out of range");
    blocked[r] = 1;
  }

  LevelAssignment out;
  out.level_of.assign(n, std::nullopt);
  std::vector<NodeId> frontier;
  for (NodeId r : roots) {
    if (!g.contains(r)) {
      throw std::invalid_argument("bfs_levels: invalid root " + std::to_string(r));
    }
    if (blocked[r]) throw std::invalid_argument("bfs_levels: root is in the removed set");
    if (!out.level_of[r]) {
      out.level_of[r] = 0;
      frontier.push_back(r);
      out.roots.push_back(r);
    }
  }
  if (frontier.empty()) throw std::invalid_argument("bfs_levels: no roots");

  std::uint32_t depth = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId v : g.neighbors(u)) {
        if (blocked[v] || out.level_of[v]) continue;
        out.level_of[v] = depth + 1;
        next.push_back(v);
      }
    }
    out.levels.push_back(std::move(frontier));
    frontier = std::move(next);
    ++depth;
  }
  return out;
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> raw(n, kUnset);
  std::vector<std::size_t> raw_sizes;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (raw[s] != kUnset) continue;
    const auto label = static_cast<std::uint32_t>(raw_sizes.size());
    std::size_t size = 0;
    raw[s] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (raw[v] == kUnset) {
          raw[v] = label;
          stack.push_back(v);
        }
      }
    }
    raw_sizes.push_back(size);
  }

  // Labels were issued in order of smallest member, so a stable sort by size
  // breaks ties towards the component holding the smaller id.
  std::vector<std::uint32_t> order(raw_sizes.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return raw_sizes[a] > raw_sizes[b]; });
  std::vector<std::uint32_t> relabel(order.size());
  Components out;
  out.sizes.resize(order.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) {
    relabel[order[k]] = k;
    out.sizes[k] = raw_sizes[order[k]];
  }
  out.component.resize(n);
  for (NodeId v = 0; v < n; ++v) out.component[v] = relabel[raw[v]];
  return out;
}

std::vector<NodeId> largest_component_nodes(const Graph& g) {
  std::vector<NodeId> out;
  if (g.empty()) return out;
  auto comps = connected_components(g);
  out.reserve(comps.sizes[0]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comps.component[v] == 0) out.push_back(v);
  }
  return out;
}

}  // namespace cascade_duel

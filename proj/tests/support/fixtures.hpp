#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cascade_duel/graph.hpp"
#include "cascade_duel/graph_io.hpp"
#include "cascade_duel/rng.hpp"

namespace cascade_duel::testing {

inline std::filesystem::path data_dir() { return CASCADE_DUEL_DATA_DIR; }

inline std::filesystem::path sample_path() { return data_dir() / "sample_network.txt"; }

// Ten-node network with file ids 1..10.
inline Graph sample_graph() { return load_edgelist(sample_path()); }

// Internal id of a file id; the sample's ids are 1..10.
inline NodeId id(const Graph& g, std::int64_t original) { return *g.find_node(original); }

inline std::vector<NodeId> ids(const Graph& g, std::initializer_list<std::int64_t> originals) {
  std::vector<NodeId> out;
  for (auto o : originals) out.push_back(id(g, o));
  return out;
}

inline std::set<std::int64_t> originals(const Graph& g, const std::vector<NodeId>& nodes) {
  std::set<std::int64_t> out;
  for (NodeId v : nodes) out.insert(g.original_id(v));
  return out;
}

inline Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_edgelist(in, "<text>");
}

// Random tree on n nodes plus `extra` random chords; connected.
inline Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(static_cast<NodeId>(rng.below(v)), v);
  for (std::size_t k = 0; k < extra; ++k) {
    edges.emplace_back(static_cast<NodeId>(rng.below(n)), static_cast<NodeId>(rng.below(n)));
  }
  return Graph::from_edges(n, edges);
}

// G(n, p) by brute force; may be disconnected.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

}  // namespace cascade_duel::testing

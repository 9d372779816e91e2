#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "cascade_duel/graph.hpp"

namespace cascade_duel {

struct EdgeListOptions {
  /// Treat each line as a directed arc and take the union of both
  /// orientations. When false the file must already be a clean undirected
  /// list: a pair repeated in either orientation is a parse error.
  bool symmetrize = true;
};

struct LoadReport {
  std::size_t lines = 0;
  std::size_t edge_lines = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// SNAP-style edge list: `u<ws>v` per line, `#` comments, blank lines
/// ignored, arbitrary non-negative integer ids. Ids are remapped to 0..n-1 in
/// ascending order of the original id.
Graph load_edgelist(const std::filesystem::path& path, EdgeListOptions options = {},
                    LoadReport* report = nullptr);
Graph read_edgelist(std::istream& in, const std::string& source_name,
                    EdgeListOptions options = {}, LoadReport* report = nullptr);

/// Writes one `u v` line per edge using original ids.
void write_edgelist(const Graph& g, std::ostream& out);
void save_edgelist(const Graph& g, const std::filesystem::path& path);

}  // namespace cascade_duel

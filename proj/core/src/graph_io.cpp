#include "cascade_duel/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "cascade_duel/error.hpp"

namespace cascade_duel {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_id(std::string_view token, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() && out >= 0;
}

}  // namespace

Graph read_edgelist(std::istream& in, const std::string& source_name, EdgeListOptions options,
                    LoadReport* report) {
  LoadReport local;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::vector<std::size_t> raw_line;
  std::string line;
  while (std::getline(in, line)) {
    ++local.lines;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(source_name, local.lines,
                       "expected two node ids, found " + std::to_string(tokens.size()) + " fields");
    }
    std::int64_t u = 0, v = 0;
    if (!parse_id(tokens[0], u) || !parse_id(tokens[1], v)) {
      throw ParseError(source_name, local.lines, "node ids must be non-negative integers");
    }
    ++local.edge_lines;
    raw.emplace_back(u, v);
    raw_line.push_back(local.lines);
  }
  if (in.bad()) throw IoError("read failure on " + source_name);

  std::vector<std::int64_t> ids;
  ids.reserve(2 * raw.size());
  for (auto [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw EmptyGraphError(source_name + ": edge list contains no edges");

  std::unordered_map<std::int64_t, NodeId> index;
  index.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], static_cast<NodeId>(i));

  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  edges.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    NodeId u = index.at(raw[k].first);
    NodeId v = index.at(raw[k].second);
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
    edge_line.push_back(raw_line[k]);
  }

  if (!options.symmetrize) {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (edges[order[k]] == edges[order[k - 1]]) {
        throw ParseError(source_name, std::max(edge_line[order[k]], edge_line[order[k - 1]]),
                         "duplicate undirected edge (symmetrize is off)");
      }
    }
  }

  const std::size_t before = edges.size();
  Graph g = Graph::from_edges(ids.size(), edges, ids);
  local.duplicates_dropped = before - g.edge_count();
  if (report) *report = local;
  return g;
}

Graph load_edgelist(const std::filesystem::path& path, EdgeListOptions options,
                    LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list " + path.string());
  return read_edgelist(in, path.string(), options, report);
}

void write_edgelist(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) {
    out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
  }
}

void save_edgelist(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_edgelist(g, out);
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace cascade_duel

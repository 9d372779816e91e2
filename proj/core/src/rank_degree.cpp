#include "cascade_duel/rank_degree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "cascade_duel/error.hpp"
#include "cascade_duel/rng.hpp"

namespace cascade_duel {

void RankDegreeParams::validate() const {
  if (initial_seeds == 0) throw std::invalid_argument("rank degree: initial_seeds must be >= 1");
  if (!max_mode && !(rho > 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("rank degree: rho must lie in (0, 1]");
  }
  if (!(target_fraction > 0.0 && target_fraction <= 1.0)) {
    throw std::invalid_argument("rank degree: target_fraction must lie in (0, 1]");
  }
}

std::size_t RankDegreeParams::target_size(std::size_t node_count) const {
  const auto t = static_cast<std::size_t>(
      std::ceil(target_fraction * static_cast<double>(node_count) - 1e-9));
  return std::clamp<std::size_t>(t, 1, std::max<std::size_t>(node_count, 1));
}

namespace {

/// Mutable copy of the adjacency that supports edge deletion.
class WorkingGraph {
 public:
  explicit WorkingGraph(const Graph& g) : adj_(g.node_count()) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      auto nb = g.neighbors(v);
      adj_[v].assign(nb.begin(), nb.end());
    }
    edges_ = g.edge_count();
  }

  const std::vector<NodeId>& friends(NodeId v) const { return adj_[v]; }
  std::size_t degree(NodeId v) const { return adj_[v].size(); }
  std::size_t edge_count() const { return edges_; }

  void erase(NodeId u, NodeId v) {
    if (drop(u, v) && drop(v, u)) --edges_;
  }

 private:
  bool drop(NodeId u, NodeId v) {
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return false;
    a.erase(it);
    return true;
  }

  std::vector<std::vector<NodeId>> adj_;
  std::size_t edges_ = 0;
};

std::set<NodeId> random_seeds(Rng& rng, std::size_t node_count, std::size_t count) {
  std::set<NodeId> seeds;
  count = std::min(count, node_count);
  while (seeds.size() < count) seeds.insert(static_cast<NodeId>(rng.below(node_count)));
  return seeds;
}

}  // namespace

RankDegreeSample rank_degree_sample(const Graph& g, const RankDegreeParams& params) {
  params.validate();
  if (g.empty()) throw EmptyGraphError("rank_degree_sample: graph has no nodes");
  const std::size_t n = g.node_count();
  const std::size_t target = params.target_size(n);

  Rng rng(params.rng_seed);
  WorkingGraph work(g);
  std::vector<char> in_sample(n, 0);
  RankDegreeSample out;
  std::size_t sample_size = 0;

  std::set<NodeId> seeds;
  for (NodeId v : params.start_nodes) {
    if (!g.contains(v)) throw std::invalid_argument("rank_degree_sample: invalid start node");
    seeds.insert(v);
  }
  if (seeds.empty()) seeds = random_seeds(rng, n, params.initial_seeds);
  while (sample_size < target) {
    if (work.edge_count() == 0) {
      out.reached_target = false;
      warn("rank_degree_sample: graph exhausted at " + std::to_string(sample_size) + " of " +
           std::to_string(target) + " target nodes; returning partial sample");
      break;
    }
    std::set<NodeId> new_seeds;
    std::vector<Edge> selected;
    for (NodeId w : seeds) {
      std::vector<NodeId> friends = work.friends(w);
      if (friends.empty()) continue;
      std::stable_sort(friends.begin(), friends.end(), [&](NodeId a, NodeId b) {
        return work.degree(a) > work.degree(b);
      });
      const std::size_t k =
          params.max_mode
              ? 1
              : std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(
                                             params.rho * static_cast<double>(friends.size()) -
                                             1e-12)));
      for (std::size_t r = 0; r < std::min(k, friends.size()); ++r) {
        const NodeId f = friends[r];
        selected.emplace_back(std::min(w, f), std::max(w, f));
        for (NodeId end : {w, f}) {
          if (!in_sample[end]) {
            in_sample[end] = 1;
            ++sample_size;
          }
        }
        new_seeds.insert(f);
      }
    }
    for (auto [u, v] : selected) work.erase(u, v);
    out.edges.insert(out.edges.end(), selected.begin(), selected.end());
    seeds = new_seeds.empty() ? random_seeds(rng, n, params.initial_seeds) : std::move(new_seeds);
  }

  for (NodeId v = 0; v < n; ++v) {
    if (in_sample[v]) out.nodes.push_back(v);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

}  // namespace cascade_duel

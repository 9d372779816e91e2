#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cascade_duel/graph.hpp"

namespace cascade_duel {

struct RankDegreeParams {
  /// Number of initial (and random-jump) seeds.
  std::size_t initial_seeds = 1;
  /// Fraction of a seed's friends taken per step, in (0, 1]. Ignored in max mode.
  double rho = 0.1;
  /// Take only the top-1 friend per seed.
  bool max_mode = false;
  /// Target sample size as a fraction of the node count, in (0, 1].
  double target_fraction = 0.10;
  std::uint64_t rng_seed = 0;
  /// Initial seeds; drawn at random when empty. Random jumps stay random.
  std::vector<NodeId> start_nodes;

  void validate() const;
  std::size_t target_size(std::size_t node_count) const;
};

struct RankDegreeSample {
  /// Ascending.
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  bool reached_target = true;
};

/// Rank-Degree graph sampling. Friends are ranked by their degree in the
/// shrinking working graph (ties: lower id first); k = ceil(rho * friends).
RankDegreeSample rank_degree_sample(const Graph& g, const RankDegreeParams& params);

}  // namespace cascade_duel

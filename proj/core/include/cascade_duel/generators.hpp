#pragma once

#include <cstddef>
#include <cstdint>

#include "cascade_duel/graph.hpp"

namespace cascade_duel {

/// G(n, p) with p = avg_degree / (n - 1).
/// Requires n >= 2 and 0 < avg_degree <= n - 1.
Graph gen_er(std::size_t n, double avg_degree, std::uint64_t rng_seed);

/// Uniform-ish simple random regular graph by stub pairing that only accepts
/// admissible pairs, restarting when stuck. Requires n*degree even, degree < n.
Graph gen_regular(std::size_t n, std::size_t degree, std::uint64_t rng_seed);

/// BFS spanning tree from a uniformly random root of the largest component.
/// A disconnected input is restricted to its largest component (with a
/// warning); node ids of the result then refer to that component.
Graph spanning_tree(const Graph& g, std::uint64_t rng_seed);

}  // namespace cascade_duel

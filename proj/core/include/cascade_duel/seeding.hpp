#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cascade_duel/centrality.hpp"
#include "cascade_duel/graph.hpp"
#include "cascade_duel/rank_degree.hpp"

namespace cascade_duel {

/// Node prices relative to the median degree: c_i = d_i / d_ct.
class CostTable {
 public:
  /// Throws Error when the median degree is zero.
  static CostTable compute(const Graph& g);

  double central_tendency_degree() const noexcept { return central_degree_; }
  double cost(NodeId v) const { return cost_of_[v]; }
  const std::vector<double>& cost_of() const noexcept { return cost_of_; }

 private:
  double central_degree_ = 0.0;
  std::vector<double> cost_of_;
};

inline CostTable compute_costs(const Graph& g) { return CostTable::compute(g); }

enum class Player { kOne = 1, kTwo = 2 };

class PlayerBudget {
 public:
  explicit PlayerBudget(Player player, double budget = 1.0);

  Player player() const noexcept { return player_; }
  double remaining() const noexcept { return remaining_; }
  bool can_afford(double cost) const noexcept { return cost <= remaining_; }
  /// Throws NoAffordableSeedError on overspend.
  void spend(double cost);

 private:
  Player player_;
  double remaining_;
};

struct SeedPolicy {
  SeedMethod method = SeedMethod::kDegree;
  bool enforce_budget = false;
  EigenvectorOptions eigen;
  RankDegreeParams rank_degree;
};

/// First node of `candidates` not in `excluded` that the budget allows
/// (charging it when enforcement is on). Throws NoAffordableSeedError.
NodeId first_affordable(std::span<const NodeId> candidates, const SeedPolicy& policy,
                        const CostTable& costs, PlayerBudget& budget,
                        std::span<const NodeId> excluded);

/// Buys every affordable candidate in order. Requires enforce_budget.
std::vector<NodeId> buy_greedy(std::span<const NodeId> candidates, const SeedPolicy& policy,
                               const CostTable& costs, PlayerBudget& budget,
                               std::span<const NodeId> excluded);

/// Highest-ranked node under `policy` not in `excluded` and, when budgets
/// are enforced, with cost <= remaining budget (which is then charged).
/// For RD the candidates are the sample's nodes ordered by degree.
NodeId select_seed(const Graph& g, const SeedPolicy& policy, const CostTable& costs,
                   PlayerBudget& budget, std::span<const NodeId> excluded,
                   std::uint64_t rng_seed);

/// Candidate order a policy would buy from: DC/EC ranking or the RD sample
/// by degree.
std::vector<NodeId> seed_candidates(const Graph& g, const SeedPolicy& policy,
                                    std::uint64_t rng_seed);

/// Buys candidates greedily in rank order until nothing else is affordable.
/// Requires enforce_budget; returns at least one node or throws.
std::vector<NodeId> select_seeds_greedy(const Graph& g, const SeedPolicy& policy,
                                        const CostTable& costs, PlayerBudget& budget,
                                        std::span<const NodeId> excluded,
                                        std::uint64_t rng_seed);

struct SeedPair {
  std::vector<NodeId> seeds1;
  std::vector<NodeId> seeds2;
  /// Player 2 wanted a node player 1 also chose and took the next one.
  bool conflict_resolved = false;
};

/// Both players choose at once from precomputed candidate orders. On a
/// clash player 2 re-selects with player 1's picks excluded.
SeedPair choose_seeds_from(std::span<const NodeId> candidates1, std::span<const NodeId> candidates2,
                           const SeedPolicy& policy1, const SeedPolicy& policy2,
                           const CostTable& costs, PlayerBudget& budget1, PlayerBudget& budget2,
                           bool multi_seed = false);

/// choose_seeds_from() with candidates drawn from seed_candidates(); the two
/// players use independent streams of `rng_seed`.
SeedPair choose_seeds(const Graph& g, const SeedPolicy& policy1, const SeedPolicy& policy2,
                      const CostTable& costs, PlayerBudget& budget1, PlayerBudget& budget2,
                      std::uint64_t rng_seed, bool multi_seed = false);

}  // namespace cascade_duel

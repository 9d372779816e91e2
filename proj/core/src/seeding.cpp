#include "cascade_duel/seeding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cascade_duel/error.hpp"
#include "cascade_duel/rng.hpp"

namespace cascade_duel {

CostTable CostTable::compute(const Graph& g) {
  if (g.empty()) throw EmptyGraphError("compute_costs: graph has no nodes");
  auto deg = g.degrees();
  std::vector<std::size_t> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median = n % 2 == 1 ? static_cast<double>(sorted[n / 2])
                                   : (static_cast<double>(sorted[n / 2 - 1]) +
                                      static_cast<double>(sorted[n / 2])) /
                                         2.0;
  if (median == 0.0) {
    throw Error("compute_costs: median degree is zero, node costs are undefined");
  }
  CostTable t;
  t.central_degree_ = median;
  t.cost_of_.resize(n);
  for (NodeId v = 0; v < n; ++v) t.cost_of_[v] = static_cast<double>(deg[v]) / median;
  return t;
}

PlayerBudget::PlayerBudget(Player player, double budget) : player_(player), remaining_(budget) {
  if (!(budget >= 0.0)) throw std::invalid_argument("PlayerBudget: budget must be >= 0");
}

void PlayerBudget::spend(double cost) {
  if (!can_afford(cost)) {
    throw NoAffordableSeedError("player " + std::to_string(static_cast<int>(player_)) +
                                " cannot afford cost " + std::to_string(cost) + " with budget " +
                                std::to_string(remaining_));
  }
  remaining_ -= cost;
}

std::vector<NodeId> seed_candidates(const Graph& g, const SeedPolicy& policy,
                                    std::uint64_t rng_seed) {
  switch (policy.method) {
    case SeedMethod::kDegree:
      return degree_centrality(g).ranking;
    case SeedMethod::kEigenvector:
      return eigenvector_centrality(g, policy.eigen).ranking;
    case SeedMethod::kRankDegree: {
      RankDegreeParams params = policy.rank_degree;
      params.rng_seed = rng_seed;
      auto sample = rank_degree_sample(g, params);
      std::vector<NodeId> nodes = std::move(sample.nodes);
      std::stable_sort(nodes.begin(), nodes.end(),
                       [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
      return nodes;
    }
  }
  throw std::logic_error("seed_candidates: unknown method");
}

namespace {

bool is_excluded(std::span<const NodeId> excluded, NodeId v) {
  return std::find(excluded.begin(), excluded.end(), v) != excluded.end();
}

}  // namespace

NodeId first_affordable(std::span<const NodeId> candidates, const SeedPolicy& policy,
                        const CostTable& costs, PlayerBudget& budget,
                        std::span<const NodeId> excluded) {
  for (NodeId v : candidates) {
    if (is_excluded(excluded, v)) continue;
    if (policy.enforce_budget) {
      if (!budget.can_afford(costs.cost(v))) continue;
      budget.spend(costs.cost(v));
    }
    return v;
  }
  if (policy.enforce_budget) {
    throw NoAffordableSeedError("no affordable seed for player " +
                                std::to_string(static_cast<int>(budget.player())) +
                                " (budget " + std::to_string(budget.remaining()) + ", method " +
                                std::string(to_string(policy.method)) + ")");
  }
  throw NoAffordableSeedError("no eligible seed left for method " +
                              std::string(to_string(policy.method)));
}

std::vector<NodeId> buy_greedy(std::span<const NodeId> candidates, const SeedPolicy& policy,
                               const CostTable& costs, PlayerBudget& budget,
                               std::span<const NodeId> excluded) {
  if (!policy.enforce_budget) {
    throw std::invalid_argument("greedy seed buying needs budget enforcement");
  }
  std::vector<NodeId> bought;
  for (NodeId v : candidates) {
    if (is_excluded(excluded, v) || !budget.can_afford(costs.cost(v))) continue;
    budget.spend(costs.cost(v));
    bought.push_back(v);
  }
  if (bought.empty()) {
    throw NoAffordableSeedError("no affordable seed for player " +
                                std::to_string(static_cast<int>(budget.player())));
  }
  return bought;
}

NodeId select_seed(const Graph& g, const SeedPolicy& policy, const CostTable& costs,
                   PlayerBudget& budget, std::span<const NodeId> excluded,
                   std::uint64_t rng_seed) {
  return first_affordable(seed_candidates(g, policy, rng_seed), policy, costs, budget, excluded);
}

std::vector<NodeId> select_seeds_greedy(const Graph& g, const SeedPolicy& policy,
                                        const CostTable& costs, PlayerBudget& budget,
                                        std::span<const NodeId> excluded,
                                        std::uint64_t rng_seed) {
  return buy_greedy(seed_candidates(g, policy, rng_seed), policy, costs, budget, excluded);
}

SeedPair choose_seeds_from(std::span<const NodeId> candidates1, std::span<const NodeId> candidates2,
                           const SeedPolicy& policy1, const SeedPolicy& policy2,
                           const CostTable& costs, PlayerBudget& budget1, PlayerBudget& budget2,
                           bool multi_seed) {
  auto pick = [&](std::span<const NodeId> candidates, const SeedPolicy& policy,
                  PlayerBudget& budget, std::span<const NodeId> excluded) -> std::vector<NodeId> {
    if (multi_seed) return buy_greedy(candidates, policy, costs, budget, excluded);
    return {first_affordable(candidates, policy, costs, budget, excluded)};
  };

  SeedPair out;
  out.seeds1 = pick(candidates1, policy1, budget1, {});
  // Player 2 decides without seeing player 1; only a clash forces a redo.
  PlayerBudget trial = budget2;
  auto wanted = pick(candidates2, policy2, trial, {});
  const bool clash = std::any_of(wanted.begin(), wanted.end(),
                                 [&](NodeId v) { return is_excluded(out.seeds1, v); });
  if (!clash) {
    budget2 = trial;
    out.seeds2 = std::move(wanted);
  } else {
    out.seeds2 = pick(candidates2, policy2, budget2, out.seeds1);
    out.conflict_resolved = true;
  }
  return out;
}

SeedPair choose_seeds(const Graph& g, const SeedPolicy& policy1, const SeedPolicy& policy2,
                      const CostTable& costs, PlayerBudget& budget1, PlayerBudget& budget2,
                      std::uint64_t rng_seed, bool multi_seed) {
  const auto c1 = seed_candidates(g, policy1, derive_seed(rng_seed, 1));
  const auto c2 = seed_candidates(g, policy2, derive_seed(rng_seed, 2));
  return choose_seeds_from(c1, c2, policy1, policy2, costs, budget1, budget2, multi_seed);
}

}  // namespace cascade_duel

#include "cascade_duel/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "cascade_duel/error.hpp"
#include "cascade_duel/generators.hpp"
#include "cascade_duel/graph_io.hpp"
#include "cascade_duel/rng.hpp"

namespace cascade_duel {

namespace {

// Streams derived from a replication seed.
constexpr std::uint64_t kStreamPlayer1 = 1;
constexpr std::uint64_t kStreamPlayer2 = 2;
constexpr std::uint64_t kStreamThresholds = 3;
constexpr std::uint64_t kStreamCoin = 4;
// Stream of the run seed used for graph generation.
constexpr std::uint64_t kStreamGraph = 0x6772617068;

NodeId resolve_seed(const Graph& g, std::int64_t original) {
  auto v = g.find_node(original);
  if (!v) throw std::invalid_argument("seed node " + std::to_string(original) + " not in graph");
  return *v;
}

bool needs_costs(const ExperimentConfig& cfg) {
  return cfg.policy1.enforce_budget || cfg.policy2.enforce_budget;
}

Moments moments_of(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0.0;
    for (double x : xs) sq += (x - m.mean) * (x - m.mean);
    m.variance = sq / static_cast<double>(xs.size() - 1);
  }
  return m;
}

std::string join_ids(const Graph& g, const std::vector<NodeId>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(g.original_id(nodes[i]));
  }
  return out;
}

std::string optional_real(const std::optional<double>& x) {
  return x ? format_real(*x) : std::string();
}

// Candidate orders that do not depend on the replication, computed once.
struct CandidateCache {
  std::optional<std::vector<NodeId>> player1;
  std::optional<std::vector<NodeId>> player2;
};

CandidateCache cache_candidates(const Graph& g, const ExperimentConfig& cfg) {
  CandidateCache cache;
  if (!cfg.fixed_seed1 && cfg.policy1.method != SeedMethod::kRankDegree) {
    cache.player1 = seed_candidates(g, cfg.policy1, 0);
  }
  if (!cfg.fixed_seed2 && cfg.policy2.method != SeedMethod::kRankDegree) {
    if (cfg.policy2.method == cfg.policy1.method && cache.player1 &&
        cfg.policy2.eigen.tol == cfg.policy1.eigen.tol &&
        cfg.policy2.eigen.max_iter == cfg.policy1.eigen.max_iter) {
      cache.player2 = cache.player1;
    } else {
      cache.player2 = seed_candidates(g, cfg.policy2, 0);
    }
  }
  return cache;
}

ReplicationResult run_one(const Graph& g, const ExperimentConfig& cfg, const CostTable& costs,
                          const CandidateCache& cache, std::size_t rep) {
  const std::uint64_t seed = replication_seed(cfg.rng_seed, rep);
  ReplicationResult r;
  r.index = rep;

  auto candidates = [&](const std::optional<std::vector<NodeId>>& cached,
                        const SeedPolicy& policy, std::uint64_t stream) {
    return cached ? *cached : seed_candidates(g, policy, derive_seed(seed, stream));
  };

  PlayerBudget budget1(Player::kOne, cfg.budget1);
  PlayerBudget budget2(Player::kTwo, cfg.budget2);
  auto pick = [&](const std::vector<NodeId>& cands, const SeedPolicy& policy,
                  PlayerBudget& budget, std::span<const NodeId> excluded) {
    if (cfg.multi_seed) return buy_greedy(cands, policy, costs, budget, excluded);
    return std::vector<NodeId>{first_affordable(cands, policy, costs, budget, excluded)};
  };

  if (cfg.fixed_seed1 && cfg.fixed_seed2) {
    r.seeds1 = {resolve_seed(g, *cfg.fixed_seed1)};
    r.seeds2 = {resolve_seed(g, *cfg.fixed_seed2)};
  } else if (cfg.fixed_seed1) {
    r.seeds1 = {resolve_seed(g, *cfg.fixed_seed1)};
    r.seeds2 = pick(candidates(cache.player2, cfg.policy2, kStreamPlayer2), cfg.policy2, budget2,
                    r.seeds1);
  } else if (cfg.fixed_seed2) {
    r.seeds2 = {resolve_seed(g, *cfg.fixed_seed2)};
    r.seeds1 = pick(candidates(cache.player1, cfg.policy1, kStreamPlayer1), cfg.policy1, budget1,
                    r.seeds2);
  } else {
    const auto c1 = candidates(cache.player1, cfg.policy1, kStreamPlayer1);
    const auto c2 = candidates(cache.player2, cfg.policy2, kStreamPlayer2);
    auto pair = choose_seeds_from(c1, c2, cfg.policy1, cfg.policy2, costs, budget1, budget2,
                                  cfg.multi_seed);
    r.seeds1 = std::move(pair.seeds1);
    r.seeds2 = std::move(pair.seeds2);
    r.seed_conflict = pair.conflict_resolved;
  }

  const Thresholds thresholds =
      assign_thresholds(g, cfg.threshold, derive_seed(seed, kStreamThresholds));
  PropagationOptions opts;
  opts.strict = cfg.strict_propagation;
  opts.thresholds = &thresholds;
  r.field = propagate_influence<double>(g, r.seeds1, r.seeds2, opts);
  r.outcome = classify(r.field, thresholds, derive_seed(seed, kStreamCoin));
  return r;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kErdosRenyi:
      return "er";
    case GeneratorKind::kRegular:
      return "regular";
    case GeneratorKind::kTree:
      return "tree";
  }
  return "?";
}

GeneratorKind parse_generator(std::string_view text) {
  if (text == "er") return GeneratorKind::kErdosRenyi;
  if (text == "regular") return GeneratorKind::kRegular;
  if (text == "tree") return GeneratorKind::kTree;
  throw std::invalid_argument("unknown generator '" + std::string(text) +
                              "' (expected er|regular|tree)");
}

std::size_t regular_degree_for(std::size_t n, double avg_degree) {
  if (n < 2) throw std::invalid_argument("regular_degree_for: need at least 2 nodes");
  auto feasible = [n](long long d) {
    return d >= 0 && static_cast<std::size_t>(d) < n && (static_cast<std::size_t>(d) * n) % 2 == 0;
  };
  const long long d = std::llround(avg_degree);
  if (feasible(d)) return static_cast<std::size_t>(d);
  // Only parity can fail here (or d >= n); step to the closer neighbour.
  const long long lo = d - 1;
  const long long hi = d + 1;
  const bool prefer_hi = std::abs(static_cast<double>(hi) - avg_degree) <=
                         std::abs(static_cast<double>(lo) - avg_degree);
  if (prefer_hi && feasible(hi)) return static_cast<std::size_t>(hi);
  if (feasible(lo)) return static_cast<std::size_t>(lo);
  if (feasible(hi)) return static_cast<std::size_t>(hi);
  throw InfeasibleError("no regular degree near " + format_real(avg_degree) + " for " +
                        std::to_string(n) + " nodes");
}

Graph build_graph(const GraphSource& source, std::uint64_t rng_seed) {
  const std::uint64_t seed = derive_seed(rng_seed, kStreamGraph);
  if (!source.generator) {
    if (source.path.empty()) throw std::invalid_argument("no graph file and no generator given");
    return load_edgelist(source.path);
  }
  std::optional<Graph> base;
  if (!source.path.empty()) base = load_edgelist(source.path);

  switch (*source.generator) {
    case GeneratorKind::kErdosRenyi: {
      const std::size_t n = base ? base->node_count() : source.nodes;
      const double k = base ? base->average_degree() : source.avg_degree;
      return gen_er(n, k, seed);
    }
    case GeneratorKind::kRegular: {
      const std::size_t n = base ? base->node_count() : source.nodes;
      std::size_t d = source.degree;
      if (base && d == 0) d = regular_degree_for(n, base->average_degree());
      return gen_regular(n, d, seed);
    }
    case GeneratorKind::kTree:
      if (!base) throw std::invalid_argument("the tree generator needs a base graph (--graph)");
      return spanning_tree(*base, seed);
  }
  throw std::logic_error("build_graph: unknown generator");
}

void ExperimentConfig::validate() const {
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (!(margin > 0.0 && margin < 1.0)) throw std::invalid_argument("margin must be in (0, 1)");
  if (!(budget1 >= 0.0) || !(budget2 >= 0.0)) {
    throw std::invalid_argument("budgets must be >= 0");
  }
  if (multi_seed && !(policy1.enforce_budget && policy2.enforce_budget)) {
    throw std::invalid_argument("multiple seeds per player need budget enforcement");
  }
  if (fixed_seed1 && fixed_seed2 && *fixed_seed1 == *fixed_seed2) {
    throw std::invalid_argument("the two fixed seeds must differ");
  }
  if (threshold.kind == ThresholdMode::Kind::kConstant &&
      !(threshold.value >= 0.0 && threshold.value <= 1.0)) {
    throw std::invalid_argument("constant threshold must be in [0, 1]");
  }
  policy1.rank_degree.validate();
  policy2.rank_degree.validate();
}

std::optional<double> Moments::stddev() const {
  if (!variance) return std::nullopt;
  return std::sqrt(*variance);
}

std::uint64_t replication_seed(std::uint64_t rng_seed, std::size_t rep) {
  return derive_seed(rng_seed, rep);
}

ReplicationResult run_replication(const Graph& g, const ExperimentConfig& cfg, std::size_t rep) {
  const CostTable costs = needs_costs(cfg) ? CostTable::compute(g) : CostTable{};
  return run_one(g, cfg, costs, cache_candidates(g, cfg), rep);
}

std::vector<LevelAggregate> aggregate_levels(const std::vector<ReplicationResult>& reps) {
  std::size_t depth = 0;
  for (const auto& r : reps) depth = std::max(depth, r.outcome.per_level.size());
  std::vector<LevelAggregate> out(depth);
  std::vector<double> xs(reps.size());
  for (std::size_t L = 0; L < depth; ++L) {
    out[L].level = static_cast<std::uint32_t>(L);
    for (int i = 0; i < 2; ++i) {
      auto at = [&](const ReplicationResult& r) -> const LevelMetrics& {
        const auto& pl = r.outcome.per_level;
        return L < pl.size() ? pl[L] : pl.back();
      };
      for (std::size_t k = 0; k < reps.size(); ++k) xs[k] = at(reps[k]).mu_influenced[i];
      out[L].influenced[i] = moments_of(xs);
      for (std::size_t k = 0; k < reps.size(); ++k) xs[k] = at(reps[k]).mu_supporter[i];
      out[L].supporter[i] = moments_of(xs);
    }
  }
  return out;
}

RunResult run_experiment(const Graph& g, const ExperimentConfig& cfg) {
  cfg.validate();
  const CostTable costs = needs_costs(cfg) ? CostTable::compute(g) : CostTable{};
  const CandidateCache cache = cache_candidates(g, cfg);

  const std::size_t n_reps = cfg.replications;
  std::vector<std::optional<ReplicationResult>> slots(n_reps);
  std::vector<std::exception_ptr> errors(n_reps);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t rep = next++; rep < n_reps; rep = next++) {
      try {
        slots[rep] = run_one(g, cfg, costs, cache, rep);
      } catch (...) {
        errors[rep] = std::current_exception();
      }
    }
  };
  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_reps));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  RunResult result;
  for (auto& s : slots) {
    if (s) result.replications.push_back(std::move(*s));
  }
  for (std::size_t rep = 0; rep < n_reps; ++rep) {
    if (!errors[rep]) continue;
    if (!cfg.output_dir.empty()) {
      write_results(g, cfg, result.replications, nullptr, cfg.output_dir);
    }
    std::string what = "unknown error";
    try {
      std::rethrow_exception(errors[rep]);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    throw Error("replication " + std::to_string(rep) + " failed: " + what +
                (cfg.output_dir.empty() ? "" : " (completed replications written)"));
  }

  result.aggregate = aggregate_levels(result.replications);
  std::vector<double> xs(n_reps);
  for (int i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < n_reps; ++k) {
      xs[k] = result.replications[k].outcome.mu_influenced(i + 1);
    }
    result.final_influenced[i] = moments_of(xs);
    for (std::size_t k = 0; k < n_reps; ++k) {
      xs[k] = result.replications[k].outcome.mu_supporter(i + 1);
    }
    result.final_supporter[i] = moments_of(xs);
  }
  result.verdict =
      game::margin_verdict(result.final_supporter[0].mean, result.final_supporter[1].mean,
                           cfg.margin);
  if (!cfg.output_dir.empty()) {
    write_results(g, cfg, result.replications, &result, cfg.output_dir);
  }
  return result;
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Graph g = build_graph(cfg.graph, cfg.rng_seed);
  return run_experiment(g, cfg);
}

CsvTable levels_table(const ExperimentConfig& cfg, const std::vector<ReplicationResult>& reps) {
  CsvTable t{{"run_id", "method", "info", "L", "mu_influenced", "mu_supporter"}, {}};
  for (const auto& r : reps) {
    for (int i = 0; i < 2; ++i) {
      const auto method = to_string((i == 0 ? cfg.policy1 : cfg.policy2).method);
      for (const auto& m : r.outcome.per_level) {
        t.add_row({std::to_string(r.index), std::string(method), std::to_string(i + 1),
                   std::to_string(m.level), format_real(m.mu_influenced[i]),
                   format_real(m.mu_supporter[i])});
      }
    }
  }
  return t;
}

CsvTable summary_table(const Graph& g, const std::vector<ReplicationResult>& reps) {
  CsvTable t{{"run_id", "seed1", "seed2", "supporters1", "supporters2", "verdict"}, {}};
  for (const auto& r : reps) {
    t.add_row({std::to_string(r.index), join_ids(g, r.seeds1), join_ids(g, r.seeds2),
               std::to_string(r.outcome.supporters1.size()),
               std::to_string(r.outcome.supporters2.size()),
               std::string(to_string(r.outcome.verdict))});
  }
  return t;
}

CsvTable aggregate_table(const ExperimentConfig& cfg, const RunResult& result) {
  CsvTable t{{"method", "info", "L", "replications", "mean_mu_influenced", "var_mu_influenced",
              "std_mu_influenced", "mean_mu_supporter", "var_mu_supporter", "std_mu_supporter"},
             {}};
  const std::string reps = std::to_string(result.replications.size());
  for (int i = 0; i < 2; ++i) {
    const auto method = to_string((i == 0 ? cfg.policy1 : cfg.policy2).method);
    for (const auto& a : result.aggregate) {
      const Moments& inf = a.influenced[i];
      const Moments& sup = a.supporter[i];
      t.add_row({std::string(method), std::to_string(i + 1), std::to_string(a.level), reps,
                 format_real(inf.mean), optional_real(inf.variance), optional_real(inf.stddev()),
                 format_real(sup.mean), optional_real(sup.variance),
                 optional_real(sup.stddev())});
    }
  }
  return t;
}

CsvTable alpha_table(const Graph& g, const std::vector<ReplicationResult>& reps) {
  CsvTable t{{"rep", "info", "node", "level", "alpha"}, {}};
  for (const auto& r : reps) {
    for (int i = 1; i <= 2; ++i) {
      const auto& track = r.field.track(i);
      for (std::size_t L = 0; L < track.levels.levels.size(); ++L) {
        for (NodeId v : track.levels.levels[L]) {
          t.add_row({std::to_string(r.index), std::to_string(i), std::to_string(g.original_id(v)),
                     std::to_string(L), format_real(track.alpha[v])});
        }
      }
    }
  }
  return t;
}

CsvTable verdict_table(const RunResult& result) {
  CsvTable t{{"rho1", "rho2", "margin", "verdict"}, {}};
  t.add_row({format_real(result.verdict.rho1), format_real(result.verdict.rho2),
             format_real(result.verdict.margin),
             std::string(game::to_string(result.verdict.verdict))});
  return t;
}

void write_results(const Graph& g, const ExperimentConfig& cfg,
                   const std::vector<ReplicationResult>& reps, const RunResult* result,
                   const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  emit_csv(levels_table(cfg, reps), dir / "levels.csv");
  emit_csv(summary_table(g, reps), dir / "summary.csv");
  emit_csv(alpha_table(g, reps), dir / "alpha.csv");
  if (result) {
    emit_csv(aggregate_table(cfg, *result), dir / "aggregate.csv");
    emit_csv(verdict_table(*result), dir / "verdict.csv");
  }
}

}  // namespace cascade_duel

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascade_duel/cascade.hpp"
#include "cascade_duel/csv.hpp"
#include "cascade_duel/game.hpp"
#include "cascade_duel/graph.hpp"
#include "cascade_duel/seeding.hpp"

namespace cascade_duel {

enum class GeneratorKind { kErdosRenyi, kRegular, kTree };

std::string_view to_string(GeneratorKind kind);
/// "er", "regular" or "tree".
GeneratorKind parse_generator(std::string_view text);

/// Where a run's graph comes from. With a generator and a `path`, the file
/// is the base graph: ER and regular copy its size and average degree, the
/// tree spans it.
struct GraphSource {
  std::filesystem::path path;
  std::optional<GeneratorKind> generator;
  std::size_t nodes = 0;
  double avg_degree = 0.0;
  std::size_t degree = 0;
};

/// Nearest degree to `avg_degree` for which an n-node regular graph exists.
std::size_t regular_degree_for(std::size_t n, double avg_degree);

Graph build_graph(const GraphSource& source, std::uint64_t rng_seed);

struct ExperimentConfig {
  GraphSource graph;
  SeedPolicy policy1;
  SeedPolicy policy2;
  ThresholdMode threshold = ThresholdMode::uniform();
  bool strict_propagation = false;
  double budget1 = 1.0;
  double budget2 = 1.0;
  bool multi_seed = false;
  /// Fixed seeds in original node ids; they bypass selection and budgets.
  std::optional<std::int64_t> fixed_seed1;
  std::optional<std::int64_t> fixed_seed2;
  std::size_t replications = 20;
  std::uint64_t rng_seed = 1;
  double margin = 0.05;
  unsigned workers = 1;
  /// Empty means nothing is written.
  std::filesystem::path output_dir;

  /// Throws std::invalid_argument.
  void validate() const;
};

struct ReplicationResult {
  std::size_t index = 0;
  std::vector<NodeId> seeds1;
  std::vector<NodeId> seeds2;
  bool seed_conflict = false;
  InfluenceField field;
  CascadeOutcome outcome;
};

struct Moments {
  double mean = 0.0;
  /// Unbiased; absent for a single replication.
  std::optional<double> variance;
  std::optional<double> stddev() const;
};

struct LevelAggregate {
  std::uint32_t level = 0;
  std::array<Moments, 2> influenced;
  std::array<Moments, 2> supporter;
};

struct RunResult {
  std::vector<ReplicationResult> replications;
  /// Runs that stop early are padded with their final values.
  std::vector<LevelAggregate> aggregate;
  std::array<Moments, 2> final_influenced;
  std::array<Moments, 2> final_supporter;
  /// On the mean final supporter fractions.
  game::MarginVerdict verdict;
};

/// Seed streams for replication `rep`.
std::uint64_t replication_seed(std::uint64_t rng_seed, std::size_t rep);

ReplicationResult run_replication(const Graph& g, const ExperimentConfig& cfg, std::size_t rep);

std::vector<LevelAggregate> aggregate_levels(const std::vector<ReplicationResult>& reps);

/// Runs cfg.replications replications on cfg.workers threads. When a
/// replication fails, the ones that finished are written to
/// cfg.output_dir and an Error naming the failed index is thrown.
RunResult run_experiment(const Graph& g, const ExperimentConfig& cfg);

/// Loads or generates the graph, then runs.
RunResult run_experiment(const ExperimentConfig& cfg);

// CSV tables. Rows are ordered by (replication, info, level).
CsvTable levels_table(const ExperimentConfig& cfg, const std::vector<ReplicationResult>& reps);
CsvTable summary_table(const Graph& g, const std::vector<ReplicationResult>& reps);
CsvTable aggregate_table(const ExperimentConfig& cfg, const RunResult& result);
CsvTable alpha_table(const Graph& g, const std::vector<ReplicationResult>& reps);
CsvTable verdict_table(const RunResult& result);

/// levels.csv, summary.csv, alpha.csv, and when `result` is complete also
/// aggregate.csv and verdict.csv.
void write_results(const Graph& g, const ExperimentConfig& cfg,
                   const std::vector<ReplicationResult>& reps, const RunResult* result,
                   const std::filesystem::path& dir);

}  // namespace cascade_duel

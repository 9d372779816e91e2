#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cascade_duel/graph.hpp"

namespace cascade_duel {

/// Exact arithmetic for reproducing hand-computed influence values.
using Rational = boost::multiprecision::cpp_rational;

struct Thresholds {
  std::vector<double> theta_of;
};

struct ThresholdMode {
  enum class Kind { kConstant, kUniform };
  Kind kind = Kind::kUniform;
  double value = 0.0;

  static ThresholdMode constant(double theta) { return {Kind::kConstant, theta}; }
  static ThresholdMode uniform() { return {Kind::kUniform, 0.0}; }
  /// "const:<v>" or "uniform".
  static ThresholdMode parse(std::string_view text);
  std::string to_string() const;
};

/// Throws std::invalid_argument for a constant outside [0, 1].
Thresholds assign_thresholds(const Graph& g, ThresholdMode mode, std::uint64_t rng_seed);

struct PropagationOptions {
  /// Nodes below their threshold do not pass influence on (children or
  /// siblings). Requires `thresholds`.
  bool strict = false;
  const Thresholds* thresholds = nullptr;
};

/// One information's pass over its pruned BFS tree.
template <class Scalar>
struct InfluenceTrack {
  LevelAssignment levels;
  /// Total influence: parent part plus sibling part. Zero if unreached.
  std::vector<Scalar> alpha;
  /// Influence received from the previous level only.
  std::vector<Scalar> parent_component;
};

template <class Scalar>
struct BasicInfluenceField {
  std::vector<NodeId> seeds1;
  std::vector<NodeId> seeds2;
  /// tracks[0] is information 1, tracks[1] information 2.
  std::array<InfluenceTrack<Scalar>, 2> tracks;

  const InfluenceTrack<Scalar>& track(int info) const { return tracks.at(info - 1); }
  const std::vector<Scalar>& alpha1_of() const { return tracks[0].alpha; }
  const std::vector<Scalar>& alpha2_of() const { return tracks[1].alpha; }
  std::size_t node_count() const { return tracks[0].alpha.size(); }
};

using InfluenceField = BasicInfluenceField<double>;
using ExactInfluenceField = BasicInfluenceField<Rational>;

/// Level-by-level influence of two competing informations.
///
/// Information i is spread over BFS levels from its seeds with the rival's
/// seeds deleted. A node `ch` at level d receives
///
///   parent part  = sum of alpha(p) over neighbours p at level d-1, / deg(ch)
///   sibling part = sum of parent part(s) over neighbours s at level d, / deg(ch)
///
/// and alpha(ch) = parent part + sibling part. Degrees are taken in the full
/// graph. Seeds have alpha = 1. Throws std::invalid_argument for invalid,
/// empty or overlapping seed sets.
template <class Scalar>
BasicInfluenceField<Scalar> propagate_influence(const Graph& g, std::span<const NodeId> seeds1,
                                                std::span<const NodeId> seeds2,
                                                const PropagationOptions& options = {});

extern template InfluenceField propagate_influence<double>(const Graph&, std::span<const NodeId>,
                                                           std::span<const NodeId>,
                                                           const PropagationOptions&);
extern template ExactInfluenceField propagate_influence<Rational>(const Graph&,
                                                                  std::span<const NodeId>,
                                                                  std::span<const NodeId>,
                                                                  const PropagationOptions&);

inline InfluenceField propagate_influence(const Graph& g, NodeId seed1, NodeId seed2,
                                          const PropagationOptions& options = {}) {
  const NodeId s1[] = {seed1};
  const NodeId s2[] = {seed2};
  return propagate_influence<double>(g, s1, s2, options);
}

inline ExactInfluenceField propagate_influence_exact(const Graph& g, NodeId seed1, NodeId seed2,
                                                     const PropagationOptions& options = {}) {
  const NodeId s1[] = {seed1};
  const NodeId s2[] = {seed2};
  return propagate_influence<Rational>(g, s1, s2, options);
}

enum class Verdict { kFirm1Wins, kFirm2Wins, kTie };
std::string_view to_string(Verdict verdict);

enum class Support : std::uint8_t { kNone = 0, kInfo1 = 1, kInfo2 = 2 };

struct LevelMetrics {
  std::uint32_t level = 0;
  std::array<double, 2> mu_influenced{};
  std::array<double, 2> mu_supporter{};
};

struct CascadeOutcome {
  std::vector<NodeId> informed1;
  std::vector<NodeId> informed2;
  std::vector<NodeId> informed_both;
  std::vector<NodeId> supporters1;
  std::vector<NodeId> supporters2;
  std::vector<NodeId> uninformed;
  /// Nodes whose side was decided by the coin.
  std::vector<NodeId> coin_assigned;
  std::vector<Support> support_of;
  std::vector<LevelMetrics> per_level;
  Verdict verdict = Verdict::kTie;

  double mu_supporter(int info) const;
  double mu_influenced(int info) const;
};

struct ClassifyOptions {
  /// Relative gap under which two influences count as equal.
  double tie_tolerance = 1e-12;
};

/// Informed by i: reached by i and alpha_i >= theta. Each node informed by
/// at least one information supports the stronger one; ties go to a fair
/// coin keyed by (tie_rng_seed, node).
CascadeOutcome classify(const InfluenceField& field, const Thresholds& thresholds,
                        std::uint64_t tie_rng_seed, const ClassifyOptions& options = {});

/// Cumulative fractions of n per level, L = 0 .. deepest level of either
/// information. Filled into CascadeOutcome::per_level by classify().
std::vector<LevelMetrics> per_level_metrics(const InfluenceField& field,
                                            const CascadeOutcome& outcome);

}  // namespace cascade_duel
